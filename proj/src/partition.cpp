#include "sympdec/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sympdec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
    throw std::invalid_argument("partition parts must be nonnegative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int part, int count) {
  if (part <= 0 || count < 0)
    throw std::invalid_argument("rectangle needs a positive part");
  return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

int Partition::multiplicity_of(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

bool Partition::is_contained_in(const Partition& outer) const {
  if (length() > outer.length()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i] > outer[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part);
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

void enumerate_into(int remaining, int max_part, int max_length,
                    std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (static_cast<int>(prefix.size()) == max_length) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, max_length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  return enumerate_partitions(n, n);
}

std::vector<Partition> enumerate_partitions(int n, int max_length) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative number");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, std::max(max_length, 0), prefix, out);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> columns;
  if (lambda.empty()) return {};
  columns.reserve(static_cast<std::size_t>(lambda[0]));
  for (int j = 1; j <= lambda[0]; ++j) {
    int height = 0;
    while (height < lambda.length() && lambda[height] >= j) ++height;
    columns.push_back(height);
  }
  return Partition(std::move(columns));
}

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw std::invalid_argument("malformed partition: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  std::string_view body = compact;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']')
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  if (body.empty() || body == "0") return {};
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    std::string_view token = body.substr(start, comma - start);
    std::size_t caret = token.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_int(token, text));
    } else {
      int part = parse_int(token.substr(0, caret), text);
      int count = parse_int(token.substr(caret + 1), text);
      if (count < 0)
        throw std::invalid_argument("negative exponent in '" + std::string(text) + "'");
      parts.insert(parts.end(), static_cast<std::size_t>(count), part);
    }
    start = comma + 1;
  }
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace sympdec
