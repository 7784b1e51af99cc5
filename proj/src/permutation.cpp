#include "springer/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "springer/error.hpp"

namespace springer {

Permutation::Permutation(int n) : images_(n) { std::iota(images_.begin(), images_.end(), 1); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > size() || seen[x]) throw Error(ErrorCode::DomainError, "not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw Error(ErrorCode::SizeMismatch, "transposition out of range");
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  Permutation p(n);
  for (int i : word) p = p * adjacent(n, i);
  return p;
}

Permutation Permutation::of_cycle_type(const std::vector<int>& cycle_type) {
  int n = std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
  Permutation p(n);
  int start = 1;
  for (int len : cycle_type) {
    for (int t = 0; t < len; ++t) p.images_[start + t - 1] = start + (t + 1) % len;
    start += len;
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (size() != rhs.size()) throw Error(ErrorCode::SizeMismatch, "composing permutations of different degree");
  std::vector<int> out(images_.size());
  for (int i = 1; i <= size(); ++i) out[i - 1] = (*this)(rhs(i));
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p(size());
  for (int i = 1; i <= size(); ++i) p.images_[(*this)(i) - 1] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lens;
  std::vector<bool> seen(size() + 1, false);
  for (int i = 1; i <= size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = (*this)(j)) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

int Permutation::sign() const {
  int s = 1;
  for (int len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

std::vector<int> Permutation::reduced_word() const {
  // Strip right descents: if p(i) > p(i+1) then p = (p * s_i) * s_i with
  // p * s_i one inversion shorter, so s_i is the rightmost letter.
  Permutation p = *this;
  std::vector<int> rev;
  bool found = true;
  while (found) {
    found = false;
    for (int i = 1; i < size(); ++i) {
      if (p(i) > p(i + 1)) {
        std::swap(p.images_[i - 1], p.images_[i]);
        rev.push_back(i);
        found = true;
        break;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

std::string Permutation::key() const {
  std::string out;
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) out += '-';
    out += std::to_string((*this)(i));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(size() + 1, false);
  for (int i = 1; i <= size(); ++i) {
    if (seen[i] || (*this)(i) == i) continue;
    out += '(';
    for (int j = i; !seen[j]; j = (*this)(j)) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

class PermParser {
 public:
  PermParser(std::string_view text, int n) : text_(text), n_(n) {}

  Permutation parse() {
    skip_ws();
    if (pos_ == text_.size()) return Permutation(n_);
    if (text_[pos_] == '(') return parse_cycles();
    if (text_[pos_] == 's') return parse_word();
    fail("expected '(' or 's'");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    int v = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (v < 1 || v > n_) throw Error(ErrorCode::SizeMismatch, "letter " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    return v;
  }

  Permutation parse_cycles() {
    Permutation total(n_);
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '(') fail("expected '('");
      ++pos_;
      std::vector<int> cyc;
      while (true) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          break;
        }
        if (pos_ == text_.size()) fail("unterminated cycle");
        cyc.push_back(number());
      }
      std::vector<bool> seen(n_ + 1, false);
      for (int x : cyc) {
        if (seen[x]) fail("repeated letter in cycle");
        seen[x] = true;
      }
      std::vector<int> img(n_);
      std::iota(img.begin(), img.end(), 1);
      for (std::size_t t = 0; t < cyc.size(); ++t) img[cyc[t] - 1] = cyc[(t + 1) % cyc.size()];
      // Cycles written left to right compose right to left.
      total = total * Permutation(img);
    }
    return total;
  }

  Permutation parse_word() {
    std::vector<int> word;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != 's') fail("expected 's'");
      ++pos_;
      int i = number();
      if (i >= n_) throw Error(ErrorCode::SizeMismatch, "s" + std::to_string(i) + " needs n > " + std::to_string(i));
      word.push_back(i);
    }
    return Permutation::from_word(n_, word);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_permutation(std::string_view text, int n) { return PermParser(text, n).parse(); }

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxPart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace springer
