#pragma once

#include <boost/property_tree/ptree.hpp>

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fraclab {

/// Reads a key = value file with optional [sections]; '#' and ';' start comments.
boost::property_tree::ptree read_key_value_file(const std::filesystem::path& path);
boost::property_tree::ptree parse_key_value(const std::string& text);

/// 17 significant digits, '.' decimal point.
std::string format_double(double v);

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// Up to k distinct indices from [0, n), sorted; depends only on the seed.
std::vector<std::size_t> seeded_sample(std::size_t n, std::size_t k, unsigned seed);

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
/// processed exactly once; results must be written to per-index slots.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace fraclab
