#include "boolprod/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>

#include "boolprod/errors.hpp"

namespace boolprod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw UsageError("partition parts must be positive, got " + std::to_string(parts_[i]));
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw UsageError("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_composition(std::span<const int> composition) {
  std::vector<int> parts;
  for (int c : composition) {
    if (c < 0) throw UsageError("composition entries must be nonnegative");
    if (c > 0) parts.push_back(c);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "-") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw UsageError("malformed partition '" + std::string(text) + "' at token '" +
                       std::string(token) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const UsageError& e) {
    throw UsageError("malformed partition '" + std::string(text) + "': " + e.what());
  }
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (parts_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    // The rest must fit into parts_left - 1 parts of size <= part.
    if (static_cast<long>(part) * parts_left < remaining) break;
    current.push_back(part);
    partitions_rec(remaining - part, part, parts_left - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_up_to(int d, int max_parts) {
  if (d < 0 || max_parts < 0) throw UsageError("partitions_up_to expects d, max_parts >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(d, d, max_parts, current, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int row) {
    out.emplace_back(current);
    if (row >= outer.length()) return;
    const int cap = row == 0 ? outer[0] : std::min(outer[row], current.back());
    for (int part = 1; part <= cap; ++part) {
      current.push_back(part);
      rec(row + 1);
      current.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), GradedRevLex{});
  return out;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> parts(lambda[0], 0);
  for (int row : lambda.parts()) {
    for (int c = 0; c < row; ++c) ++parts[c];
  }
  return Partition(std::move(parts));
}

Partition staircase(int k) {
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) {
    throw UsageError("dominance_leq: sizes differ (" + std::to_string(mu.size()) + " vs " +
                     std::to_string(lambda.size()) + ")");
  }
  int sum_mu = 0;
  int sum_lambda = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 0; i < len; ++i) {
    sum_mu += mu[i];
    sum_lambda += lambda[i];
    if (sum_mu > sum_lambda) return false;
  }
  return true;
}

bool contained_in(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 0; i < mu.length(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Kostka numbers
//
// K(lambda, (c_1..c_k)) = sum over nu with lambda/nu a horizontal strip of
// size c_k of K(nu, (c_1..c_{k-1})). The content is sorted into a partition
// first (K is invariant under permuting the content), so every memo key is a
// shape plus a prefix of a partition.

namespace {

struct KostkaMemo {
  std::unordered_map<std::string, Integer> table;
};

std::string memo_key(const std::vector<int>& shape, std::span<const int> content) {
  std::string key;
  key.reserve(shape.size() + content.size() + 1);
  key.push_back(static_cast<char>(shape.size()));
  for (int s : shape) key.push_back(static_cast<char>(s));
  for (int c : content) key.push_back(static_cast<char>(c));
  return key;
}

Integer kostka_rec(const std::vector<int>& shape, std::span<const int> content, KostkaMemo& memo);

void strips(const std::vector<int>& shape, std::size_t row, int remaining, std::vector<int>& inner,
            std::span<const int> content, KostkaMemo& memo, Integer& acc) {
  if (row == shape.size()) {
    if (remaining == 0) {
      std::vector<int> trimmed = inner;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      acc += kostka_rec(trimmed, content, memo);
    }
    return;
  }
  const int next = row + 1 < shape.size() ? shape[row + 1] : 0;
  // inner[row] ranges over [next, shape[row]].
  const int max_remove = std::min(remaining, shape[row] - next);
  for (int removed = 0; removed <= max_remove; ++removed) {
    inner[row] = shape[row] - removed;
    strips(shape, row + 1, remaining - removed, inner, content, memo, acc);
  }
}

Integer kostka_rec(const std::vector<int>& shape, std::span<const int> content, KostkaMemo& memo) {
  if (content.empty()) return shape.empty() ? 1 : 0;
  if (shape.size() > content.size()) return 0;
  // Nonzero only when the content is dominated by the shape.
  int sum_shape = 0;
  int sum_content = 0;
  for (std::size_t i = 0; i < content.size(); ++i) {
    sum_shape += i < shape.size() ? shape[i] : 0;
    sum_content += content[i];
    if (sum_content > sum_shape) return 0;
  }
  const std::string key = memo_key(shape, content);
  if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;

  Integer acc = 0;
  std::vector<int> inner(shape.size(), 0);
  strips(shape, 0, content.back(), inner, content.first(content.size() - 1), memo, acc);
  memo.table.emplace(key, acc);
  return acc;
}

}  // namespace

Integer kostka(const Partition& lambda, std::span<const int> content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw UsageError("kostka: content entries must be nonnegative");
    total += c;
  }
  if (total != lambda.size()) {
    throw UsageError("kostka: |lambda| = " + std::to_string(lambda.size()) +
                     " but content sums to " + std::to_string(total));
  }
  if (total > 255) throw CapacityError("kostka: sizes above 255 are not supported");
  const Partition sorted = Partition::from_composition(content);
  thread_local KostkaMemo memo;
  if (memo.table.size() > 4'000'000) memo.table.clear();
  return kostka_rec(lambda.parts(), std::span<const int>(sorted.parts()), memo);
}

// ---------------------------------------------------------------------------
// Tableaux

Partition Tableau::shape() const {
  std::vector<int> lengths;
  for (const auto& row : rows) {
    if (row.empty()) throw UsageError("tableau has an empty row");
    lengths.push_back(static_cast<int>(row.size()));
  }
  return Partition(std::move(lengths));
}

bool Tableau::is_semistandard() const {
  try {
    (void)shape();
  } catch (const UsageError&) {
    return false;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) return false;
      if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  std::vector<int> entries;
  for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::vector<Tableau> syt_list(const Partition& lambda) {
  std::vector<Tableau> out;
  if (lambda.empty()) return out;
  Tableau current;
  current.rows.resize(lambda.length());
  const int n = lambda.size();
  std::function<void(int)> place = [&](int entry) {
    if (entry > n) {
      out.push_back(current);
      return;
    }
    for (int r = 0; r < lambda.length(); ++r) {
      const auto len = static_cast<int>(current.rows[r].size());
      if (len == lambda[r]) continue;
      if (r > 0 && len >= static_cast<int>(current.rows[r - 1].size())) continue;
      current.rows[r].push_back(entry);
      place(entry + 1);
      current.rows[r].pop_back();
    }
  };
  place(1);
  return out;
}

int smallest_ascent(const Tableau& tableau) {
  if (!tableau.is_standard()) throw UsageError("smallest_ascent: tableau is not standard");
  int n = 0;
  for (const auto& row : tableau.rows) n += static_cast<int>(row.size());
  std::vector<int> row_of(n + 1, 0);
  for (std::size_t r = 0; r < tableau.rows.size(); ++r) {
    for (int entry : tableau.rows[r]) row_of[entry] = static_cast<int>(r);
  }
  for (int i = 1; i < n; ++i) {
    if (row_of[i + 1] <= row_of[i]) return i;
  }
  return n;
}

Integer num_syt(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  Integer hooks = 1;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      hooks *= (lambda[r] - c - 1) + (conj[c] - r - 1) + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

}  // namespace boolprod
