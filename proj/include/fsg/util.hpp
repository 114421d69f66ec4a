#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fsg {

std::string base64_encode(const void* data, std::size_t size);
std::string base64_encode(std::string_view bytes);
std::vector<std::uint8_t> base64_decode(std::string_view text);

/// FNV-1a 64-bit. Used for run manifests, mock keys and seeded hashing;
/// not cryptographic.
std::uint64_t fnv1a64(const void* data, std::size_t size,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a64(std::string_view bytes,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string to_hex(std::uint64_t value);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

/// FNV-1a hash of a file's contents, as hex.
std::string hash_file(const std::filesystem::path& path);

/// Runs fn(i) for i in [0, n) on up to `workers` threads. Blocks until all
/// complete; exceptions are rethrown on the caller. With workers <= 1 the
/// loop runs inline.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& fn);

/// Lowercased alphanumeric tokens of a free-text string.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace fsg
