#include "hubness/matrixio.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hubness/error.hpp"

namespace hubness {
namespace {

constexpr char kMagic[4] = {'H', 'U', 'B', 'M'};

template <typename UInt>
void put_le(std::vector<std::byte>& out, UInt value) {
  for (std::size_t i = 0; i < sizeof(UInt); ++i) {
    out.push_back(static_cast<std::byte>((value >> (8 * i)) & 0xFFu));
  }
}

template <typename UInt>
UInt get_le(std::span<const std::byte> bytes, std::size_t offset) {
  UInt value = 0;
  for (std::size_t i = 0; i < sizeof(UInt); ++i) {
    value |= static_cast<UInt>(std::to_integer<unsigned>(bytes[offset + i])) << (8 * i);
  }
  return value;
}

std::string at_offset(std::size_t offset) { return " at byte offset " + std::to_string(offset); }

}  // namespace

std::vector<std::byte> encode_matrix(const DenseMatrix& m) {
  const std::size_t width = element_width(m.dtype());
  std::vector<std::byte> out;
  out.reserve(kHubmHeaderSize + m.size() * width);
  for (char c : kMagic) out.push_back(static_cast<std::byte>(c));
  put_le<std::uint32_t>(out, kHubmVersion);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(m.dtype()));
  put_le<std::uint64_t>(out, m.rows());
  put_le<std::uint64_t>(out, m.cols());
  for (double v : m.values()) {
    if (m.dtype() == DType::binary32) {
      put_le(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
    } else {
      put_le(out, std::bit_cast<std::uint64_t>(v));
    }
  }
  return out;
}

DenseMatrix decode_matrix(std::span<const std::byte> bytes) {
  if (bytes.size() < kHubmHeaderSize) {
    throw_data("truncated HUBM header: expected " + std::to_string(kHubmHeaderSize) +
               " bytes, got " + std::to_string(bytes.size()));
  }
  if (std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw_data("bad magic (expected \"HUBM\")" + at_offset(0));
  }
  const auto version = get_le<std::uint32_t>(bytes, 4);
  if (version != kHubmVersion) {
    throw_data("unsupported HUBM version " + std::to_string(version) + at_offset(4));
  }
  const auto dtype_tag = get_le<std::uint32_t>(bytes, 8);
  if (dtype_tag > 1) {
    throw_data("unknown dtype tag " + std::to_string(dtype_tag) + at_offset(8));
  }
  const auto dtype = static_cast<DType>(dtype_tag);
  const auto rows = get_le<std::uint64_t>(bytes, 12);
  const auto cols = get_le<std::uint64_t>(bytes, 20);
  const std::size_t width = element_width(dtype);

  const std::size_t actual = bytes.size() - kHubmHeaderSize;
  const unsigned __int128 expected = static_cast<unsigned __int128>(rows) * cols * width;
  if (expected != actual) {
    const std::string expected_text =
        expected > std::numeric_limits<std::uint64_t>::max()
            ? std::string("more than 2^64")
            : std::to_string(static_cast<std::uint64_t>(expected));
    throw_data(std::string(actual < expected ? "truncated" : "oversized") +
               " payload: expected " + expected_text + " bytes, got " +
               std::to_string(actual) + at_offset(kHubmHeaderSize));
  }

  std::vector<double> values(rows * cols);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t offset = kHubmHeaderSize + i * width;
    const double v = dtype == DType::binary32
                         ? static_cast<double>(std::bit_cast<float>(get_le<std::uint32_t>(bytes, offset)))
                         : std::bit_cast<double>(get_le<std::uint64_t>(bytes, offset));
    if (!std::isfinite(v)) {
      throw_data("non-finite element (row " + std::to_string(i / cols) + ", column " +
                 std::to_string(i % cols) + ")" + at_offset(offset));
    }
    values[i] = v;
  }
  return DenseMatrix(rows, cols, std::move(values), dtype);
}

DenseMatrix read_matrix(const std::filesystem::path& path) {
  const std::string raw = read_text_file(path);
  try {
    return decode_matrix(std::as_bytes(std::span(raw.data(), raw.size())));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void write_matrix(const DenseMatrix& m, const std::filesystem::path& path) {
  const auto bytes = encode_matrix(m);
  write_text_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

void FrequencyTable::add(std::uint64_t id, std::uint64_t count) {
  if (!counts_.emplace(id, count).second) {
    throw_data("duplicate token id " + std::to_string(id));
  }
  total_ += count;
}

std::uint64_t FrequencyTable::count(std::uint64_t id) const {
  const auto it = counts_.find(id);
  return it == counts_.end() ? 0 : it->second;
}

void FrequencyTable::check_vocabulary(std::size_t vocab_size) const {
  if (!counts_.empty() && counts_.rbegin()->first >= vocab_size) {
    throw_data("token id " + std::to_string(counts_.rbegin()->first) +
               " outside vocabulary of size " + std::to_string(vocab_size));
  }
}

FrequencyTable parse_frequency_table(std::string_view text) {
  FrequencyTable table;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    const std::string where = "frequency table line " + std::to_string(line_no);
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw_data(where + ": expected <id>\\t<count>");
    const std::string_view id_text = line.substr(0, tab);
    const std::string_view count_text = line.substr(tab + 1);

    std::uint64_t id = 0;
    auto [id_end, id_ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
    if (id_text.empty() || id_ec != std::errc{} || id_end != id_text.data() + id_text.size()) {
      throw_data(where + ": malformed token id '" + std::string(id_text) + "'");
    }
    std::int64_t count = 0;
    auto [c_end, c_ec] =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (count_text.empty() || c_ec != std::errc{} ||
        c_end != count_text.data() + count_text.size()) {
      throw_data(where + ": malformed count '" + std::string(count_text) + "'");
    }
    if (count < 0) throw_data(where + ": negative count " + std::to_string(count));
    try {
      table.add(id, static_cast<std::uint64_t>(count));
    } catch (const Error& e) {
      throw_data(where + ": " + e.what());
    }
  }
  return table;
}

FrequencyTable read_frequency_table(const std::filesystem::path& path) {
  try {
    return parse_frequency_table(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

Vocabulary parse_vocabulary(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw_data(std::string("vocabulary is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw_data("vocabulary must be a JSON array of strings");
  Vocabulary vocab;
  vocab.tokens.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_string()) throw_data("vocabulary entry " + std::to_string(i) + " is not a string");
    vocab.tokens.push_back(doc[i].get<std::string>());
  }
  return vocab;
}

Vocabulary read_vocabulary(const std::filesystem::path& path) {
  try {
    return parse_vocabulary(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void write_vocabulary(const Vocabulary& vocab, const std::filesystem::path& path) {
  write_text_file(path, nlohmann::json(vocab.tokens).dump() + "\n");
}

std::vector<std::size_t> parse_gold_labels(std::string_view text) {
  std::vector<std::size_t> labels;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    std::size_t id = 0;
    auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), id);
    if (line.empty() || ec != std::errc{} || end != line.data() + line.size()) {
      throw_data("gold label line " + std::to_string(line_no) + ": malformed token id '" +
                 std::string(line) + "'");
    }
    labels.push_back(id);
  }
  return labels;
}

std::vector<std::size_t> read_gold_labels(const std::filesystem::path& path) {
  try {
    return parse_gold_labels(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_data("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw_data("read failure on " + path.string());
  return std::move(buffer).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw_data("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw_data("write failure on " + path.string());
}

}  // namespace hubness
