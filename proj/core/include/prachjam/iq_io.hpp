#pragma once

#include <filesystem>

#include "prachjam/waveform.hpp"

namespace prachjam {

// Raw SDR layout: little-endian interleaved float32 I/Q pairs. The sidecar
// `<path>.json` carries sample_rate and start_offset.
void write_iq(const std::filesystem::path& path, const IqFrame& frame);
IqFrame read_iq(const std::filesystem::path& path);

std::filesystem::path iq_sidecar_path(const std::filesystem::path& path);

}  // namespace prachjam
