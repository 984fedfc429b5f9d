#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hubness/matrix.hpp"

namespace hubness {

// HUBM layout (all integers little-endian):
//   0..3   "HUBM"
//   4..7   u32 version = 1
//   8..11  u32 dtype (0 = binary32, 1 = binary64)
//   12..19 u64 rows
//   20..27 u64 cols
//   28..   rows*cols elements, row-major, little-endian IEEE-754
inline constexpr std::size_t kHubmHeaderSize = 28;
inline constexpr std::uint32_t kHubmVersion = 1;

std::vector<std::byte> encode_matrix(const DenseMatrix& m);
// Throws Error(data) naming the byte offset of the first problem.
DenseMatrix decode_matrix(std::span<const std::byte> bytes);

DenseMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(const DenseMatrix& m, const std::filesystem::path& path);

class FrequencyTable {
 public:
  FrequencyTable() = default;

  // Throws Error(data) on a duplicate id.
  void add(std::uint64_t id, std::uint64_t count);

  std::uint64_t count(std::uint64_t id) const;
  std::uint64_t total() const noexcept { return total_; }
  std::size_t entries() const noexcept { return counts_.size(); }
  const std::map<std::uint64_t, std::uint64_t>& counts() const noexcept { return counts_; }

  // Throws Error(data) if any id is >= vocab_size.
  void check_vocabulary(std::size_t vocab_size) const;

 private:
  std::map<std::uint64_t, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// `<token-id>\t<count>` per LF-terminated line. Ids absent from the text
// count zero.
FrequencyTable parse_frequency_table(std::string_view text);
FrequencyTable read_frequency_table(const std::filesystem::path& path);

// Token strings indexed by unembedding row. Stored as a JSON array because
// tokens may contain control characters and newlines.
struct Vocabulary {
  std::vector<std::string> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
};

Vocabulary parse_vocabulary(std::string_view json_text);
Vocabulary read_vocabulary(const std::filesystem::path& path);
void write_vocabulary(const Vocabulary& vocab, const std::filesystem::path& path);

// One decimal token id per line.
std::vector<std::size_t> parse_gold_labels(std::string_view text);
std::vector<std::size_t> read_gold_labels(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace hubness
