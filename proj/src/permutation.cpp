#include "pipedream/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace pipedream {

RankMatrix::RankMatrix(std::span<const int> images)
    : n_(static_cast<int>(images.size())),
      table_(static_cast<std::size_t>((n_ + 1) * (n_ + 1)), 0) {
  const int stride = n_ + 1;
  for (int p = 1; p <= n_; ++p) {
    const int one_col = images[static_cast<std::size_t>(p - 1)];
    for (int q = 1; q <= n_; ++q) {
      table_[p * stride + q] = table_[(p - 1) * stride + q] +
                               table_[p * stride + q - 1] -
                               table_[(p - 1) * stride + q - 1] +
                               (one_col == q ? 1 : 0);
    }
  }
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation must be non-empty");
  std::vector<bool> seen(images_.size() + 1, false);
  const int n = size();
  for (int image : images_) {
    if (image < 1 || image > n || seen[static_cast<std::size_t>(image)])
      throw std::invalid_argument("not a bijection of {1.." + std::to_string(n) + "}");
    seen[static_cast<std::size_t>(image)] = true;
  }
  ranks_ = RankMatrix(images_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::longest(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(images));
}

Permutation Permutation::simple_transposition(int n, int k) {
  if (k < 1 || k >= n) throw std::out_of_range("simple transposition index out of range");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[static_cast<std::size_t>(k - 1)], images[static_cast<std::size_t>(k)]);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\n' && c != '\r'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

int parse_token(std::string_view token) {
  token = trim(token);
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last)
    throw std::invalid_argument("non-numeric token '" + std::string(token) + "'");
  return value;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty permutation");
  std::vector<int> images;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument(std::string("non-numeric token '") + c + "'");
      images.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      images.push_back(parse_token(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return Permutation(std::move(images));
}

int rank(const Permutation& w, int p, int q) {
  const int n = w.size();
  if (p < 1 || p > n || q < 1 || q > n)
    throw std::out_of_range("rank index (" + std::to_string(p) + "," + std::to_string(q) +
                            ") outside 1.." + std::to_string(n));
  return w.ranks()(p, q);
}

int length(const Permutation& w) {
  int inversions = 0;
  const auto images = w.images();
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++inversions;
  return inversions;
}

bool bruhat_geq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("bruhat_geq: size mismatch");
  const int n = v.size();
  const auto& rv = v.ranks();
  const auto& rw = w.ranks();
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q)
      if (rv(p, q) > rw(p, q)) return false;
  return true;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    fn(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

}  // namespace pipedream
