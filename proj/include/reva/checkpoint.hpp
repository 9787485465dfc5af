#pragma once

#include <cstdint>
#include <string>

#include "reva/net.hpp"

namespace reva {

// Training provenance carried inside the checkpoint descriptor string.
struct TrainMeta {
    uint64_t seed = 0;
    int epochs = 0;
    std::string method = "standard"; // standard | augmix | reva | reva-minus
};

bool is_known_method(const std::string& method);

// Layout: "RVA1", u32 version, u32-length-prefixed descriptor string
// (architecture fields plus seed/epochs/method), then one record per
// parameter array {u32 name length, name, u32 rank, u32 dims..., f32 LE
// payload}, and a trailing CRC32 over all preceding bytes.
void save_checkpoint(const Network& net, const TrainMeta& meta, const std::string& path);
Network load_checkpoint(const std::string& path, TrainMeta* meta = nullptr);

uint32_t crc32(const void* data, size_t len);

} // namespace reva
