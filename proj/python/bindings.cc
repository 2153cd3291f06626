// Copyright 2026 The nexcodec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings for the codec, metrics and training entry points.

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "nxc/bitstream.h"
#include "nxc/checkpoint.h"
#include "nxc/codec.h"
#include "nxc/evaluation.h"
#include "nxc/image.h"
#include "nxc/metrics.h"
#include "nxc/training.h"

namespace py = pybind11;
using namespace nxc;

namespace {

using Image = py::array_t<uint8_t, py::array::c_style | py::array::forcecast>;

// HxWx3 uint8 -> (1, 3, H, W) in [0, 1].
template <typename T = float>
Tensor<T> FromArray(const Image& a) {
  if (a.ndim() != 3 || a.shape(2) != 3) {
    throw py::value_error("expected an HxWx3 uint8 array");
  }
  const int h = static_cast<int>(a.shape(0)), w = static_cast<int>(a.shape(1));
  Tensor<T> t(1, 3, h, w);
  const uint8_t* src = a.data();
  for (int c = 0; c < 3; ++c) {
    T* dst = t.plane(0, c);
    for (size_t i = 0; i < static_cast<size_t>(h) * w; ++i) dst[i] = src[i * 3 + c] / T(255);
  }
  return t;
}

Image ToArray(const Tensor<float>& t) {
  Image a({t.h(), t.w(), 3});
  uint8_t* dst = a.mutable_data();
  for (int c = 0; c < 3; ++c) {
    const float* src = t.plane(0, c);
    for (size_t i = 0; i < t.shape().plane(); ++i) {
      dst[i * 3 + c] = static_cast<uint8_t>(std::lround(std::clamp(src[i], 0.0f, 1.0f) * 255.0f));
    }
  }
  return a;
}

py::bytes ToBytes(const std::vector<uint8_t>& v) {
  return {reinterpret_cast<const char*>(v.data()), v.size()};
}

std::vector<uint8_t> FromBytes(const py::bytes& b) {
  const std::string s = b;
  return {s.begin(), s.end()};
}

RdCurve ToCurve(const std::vector<std::pair<double, double>>& pts) {
  RdCurve c;
  for (auto [bpp, psnr] : pts) c.points.push_back({bpp, psnr});
  return c;
}

// Owns a loaded checkpoint and a codec bound to it.
class PyCodec {
 public:
  PyCodec(const std::string& checkpoint, bool canonical)
      : loaded_(LoadCheckpoint(checkpoint)),
        codec_(std::make_unique<Codec>(*loaded_.model,
                                       canonical ? ExecMode::kCanonical : ExecMode::kFast)) {}

  py::bytes Compress(const Image& image) const {
    const Tensor<float> x = FromArray(image);
    std::vector<uint8_t> bytes;
    {
      py::gil_scoped_release release;
      bytes = SerializeBitstream(codec_->Compress(x).bitstream);
    }
    return ToBytes(bytes);
  }

  Image Decompress(const py::bytes& stream) const {
    const std::vector<uint8_t> bytes = FromBytes(stream);
    Tensor<float> x_hat;
    {
      py::gil_scoped_release release;
      x_hat = codec_->Decompress(bytes).x_hat;
    }
    return ToArray(x_hat);
  }

  // Real and estimated rate of one image without keeping the stream.
  py::dict Measure(const Image& image) const {
    const Tensor<float> x = FromArray(image);
    const EncodeResult enc = codec_->Compress(x);
    Tensor<float> x_hat = codec_->Decompress(enc.bitstream).x_hat;
    QuantizeTo8Bit(x_hat);
    const double pixels = static_cast<double>(x.h()) * x.w();
    py::dict d;
    d["bytes"] = enc.bitstream.TotalBytes();
    d["bpp"] = 8.0 * static_cast<double>(enc.bitstream.TotalBytes()) / pixels;
    d["estimated_bpp"] = enc.estimated_bits / pixels;
    d["psnr"] = Psnr(x, x_hat);
    return d;
  }

  std::string ConfigJson() const { return loaded_.model->config().ToJson().dump(); }
  int64_t NumParams() const { return loaded_.model->NumParams(); }

 private:
  LoadedModel loaded_;
  std::unique_ptr<Codec> codec_;
};

py::dict Header(const py::bytes& stream) {
  const Bitstream b = ParseBitstream(FromBytes(stream));
  py::dict d;
  d["version"] = b.version;
  d["height"] = b.original_h;
  d["width"] = b.original_w;
  d["padded_height"] = b.padded_h;
  d["padded_width"] = b.padded_w;
  d["model_id"] = b.model_id;
  d["z_bytes"] = b.z.size();
  std::vector<size_t> slices;
  for (const auto& s : b.slices) slices.push_back(s.size());
  d["slice_bytes"] = slices;
  return d;
}

std::vector<py::dict> Train(const std::string& job_json, const std::string& out_dir,
                            const std::function<void(int64_t, double)>& on_step) {
  TrainJob job = TrainJob::FromJson(nlohmann::json::parse(job_json));
  job.out_dir = out_dir;
  std::vector<StepMetrics> trace;
  {
    py::gil_scoped_release release;
    trace = RunTraining(job, [&](const StepMetrics& m) {
      if (!on_step) return;
      py::gil_scoped_acquire acquire;
      on_step(m.step, m.loss);
    });
  }
  std::vector<py::dict> out;
  for (const auto& m : trace) {
    py::dict d;
    d["step"] = m.step;
    d["loss"] = m.loss;
    d["bpp"] = m.bpp;
    d["mse"] = m.mse;
    d["psnr"] = m.psnr;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_nexcodec, m) {
  m.doc() = "Learned image codec: compression, metrics and training.";

  py::register_exception<Error>(m, "NxcError", PyExc_RuntimeError);

  py::class_<PyCodec>(m, "Codec")
      .def(py::init<const std::string&, bool>(), py::arg("checkpoint"),
           py::arg("canonical") = false)
      .def("compress", &PyCodec::Compress, py::arg("image"))
      .def("decompress", &PyCodec::Decompress, py::arg("stream"))
      .def("measure", &PyCodec::Measure, py::arg("image"))
      .def_property_readonly("config_json", &PyCodec::ConfigJson)
      .def_property_readonly("num_params", &PyCodec::NumParams);

  m.def("read_header", &Header, py::arg("stream"));
  m.def(
      "psnr",
      [](const Image& a, const Image& b) {
        return Psnr(FromArray<double>(a), FromArray<double>(b));
      },
      py::arg("reference"), py::arg("test"));
  m.def(
      "bd_rate",
      [](const std::vector<std::pair<double, double>>& anchor,
         const std::vector<std::pair<double, double>>& test, const std::string& method) {
        if (method != "cubic" && method != "pchip") {
          throw py::value_error("method must be 'cubic' or 'pchip'");
        }
        return BdRate(ToCurve(anchor), ToCurve(test),
                      method == "cubic" ? BdMethod::kCubic : BdMethod::kPchip);
      },
      py::arg("anchor"), py::arg("test"), py::arg("method") = "cubic");
  m.def(
      "synthetic_images",
      [](int count, int size, uint64_t seed) {
        std::vector<Image> out;
        for (const auto& t : SyntheticImages(count, size, size, seed)) out.push_back(ToArray(t));
        return out;
      },
      py::arg("count"), py::arg("size"), py::arg("seed"));
  m.def(
      "preset_json",
      [](const std::string& name) { return ModelConfig::FromPreset(name).ToJson().dump(); },
      py::arg("name"));
  m.def(
      "param_count",
      [](const std::string& config_json) {
        Model<float> model(ModelConfig::FromJson(nlohmann::json::parse(config_json)));
        return model.NumParams();
      },
      py::arg("config_json"));
  m.def("train", &Train, py::arg("job_json"), py::arg("out_dir"),
        py::arg("on_step") = std::function<void(int64_t, double)>());
}
