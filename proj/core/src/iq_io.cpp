#include "prachjam/iq_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace prachjam {
namespace {

static_assert(sizeof(float) == 4);

std::array<unsigned char, 4> to_le(float v) {
  std::uint32_t bits = std::bit_cast<std::uint32_t>(v);
  return {static_cast<unsigned char>(bits), static_cast<unsigned char>(bits >> 8),
          static_cast<unsigned char>(bits >> 16), static_cast<unsigned char>(bits >> 24)};
}

float from_le(const unsigned char* p) {
  const std::uint32_t bits = static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
                             (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
  return std::bit_cast<float>(bits);
}

}  // namespace

std::filesystem::path iq_sidecar_path(const std::filesystem::path& path) {
  auto sidecar = path;
  sidecar += ".json";
  return sidecar;
}

void write_iq(const std::filesystem::path& path, const IqFrame& frame) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  std::vector<unsigned char> buf;
  buf.reserve(frame.samples.size() * 8);
  for (const auto& s : frame.samples) {
    for (float part : {static_cast<float>(s.real()), static_cast<float>(s.imag())}) {
      const auto b = to_le(part);
      buf.insert(buf.end(), b.begin(), b.end());
    }
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));

  nlohmann::json meta{{"format", "cf32_le"},
                      {"sample_rate", frame.sample_rate},
                      {"start_offset", frame.start_offset},
                      {"num_samples", frame.samples.size()}};
  std::ofstream side(iq_sidecar_path(path));
  if (!side) throw std::runtime_error("cannot open sidecar for " + path.string());
  side << meta.dump(2) << '\n';
}

IqFrame read_iq(const std::filesystem::path& path) {
  std::ifstream side(iq_sidecar_path(path));
  if (!side) throw std::runtime_error("missing sidecar " + iq_sidecar_path(path).string());
  const auto meta = nlohmann::json::parse(side);

  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (buf.size() % 8 != 0) throw std::runtime_error(path.string() + ": size is not a multiple of 8 bytes");

  IqFrame frame;
  frame.sample_rate = meta.at("sample_rate").get<double>();
  frame.start_offset = meta.value("start_offset", 0);
  frame.samples.resize(buf.size() / 8);
  for (std::size_t i = 0; i < frame.samples.size(); ++i)
    frame.samples[i] = Complex(from_le(&buf[8 * i]), from_le(&buf[8 * i + 4]));
  return frame;
}

}  // namespace prachjam
