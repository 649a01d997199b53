#include "braidseed/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace braidseed {

BraidWord parse_word(const std::string& text, int n) {
  if (n < 2) throw InvalidInput("strand count must be at least 2, got " + std::to_string(n));
  BraidWord w;
  w.n = n;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int letter = 0;
    try {
      letter = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("non-integer token '" + tok + "' in braid word");
    }
    if (used != tok.size()) throw InvalidInput("non-integer token '" + tok + "' in braid word");
    if (letter < 1 || letter > n - 1)
      throw InvalidInput("letter " + std::to_string(letter) + " out of range 1.." + std::to_string(n - 1));
    w.letters.push_back(letter);
  }
  return w;
}

Permutation::Permutation(int n) {
  if (n < 1) throw InvalidInput("permutation size must be positive");
  img_.resize(n);
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_oneline(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  if (n < 1) throw InvalidInput("empty one-line notation");
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v]) throw InvalidInput("one-line notation is not a permutation of 1..n");
    seen[v] = true;
  }
  Permutation p;
  p.img_ = images;
  return p;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  Permutation p(n);
  for (int letter : word) p = p.times_s(letter);
  return p;
}

Permutation Permutation::longest(int n) {
  Permutation p(n);
  std::reverse(p.img_.begin(), p.img_.end());
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r(n());
  for (int i = 1; i <= n(); ++i) r.img_[img_[i - 1] - 1] = i;
  return r;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (n() != other.n()) throw InvalidInput("composing permutations of different sizes");
  Permutation r(n());
  for (int i = 1; i <= n(); ++i) r.img_[i - 1] = img_[other.img_[i - 1] - 1];
  return r;
}

Permutation Permutation::times_s(int i) const {
  if (i < 1 || i >= n()) throw InvalidInput("simple reflection index out of range");
  Permutation r = *this;
  std::swap(r.img_[i - 1], r.img_[i]);
  return r;
}

Permutation Permutation::s_times(int i) const {
  if (i < 1 || i >= n()) throw InvalidInput("simple reflection index out of range");
  Permutation r = *this;
  for (auto& v : r.img_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return r;
}

int Permutation::length() const {
  int count = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (img_[i] > img_[j]) ++count;
  return count;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

Permutation demazure_quotient(const Permutation& v, int i) {
  // ell(v s_i) < ell(v) iff v(i) > v(i+1).
  if (i < 1 || i >= v.n()) throw InvalidInput("demazure_quotient index out of range");
  if (v(i) > v(i + 1)) return v.times_s(i);
  return v;
}

bool DemazureTrace::in_J(int position) const {
  return std::binary_search(J.begin(), J.end(), position);
}

DemazureTrace demazure_trace(const Permutation& u, const BraidWord& beta) {
  if (u.n() != beta.n) throw InvalidInput("permutation and braid word have different n");
  int k = beta.length();
  DemazureTrace t;
  t.useq.resize(k + 1, Permutation(u.n()));
  t.useq[k] = u;
  for (int j = k; j >= 1; --j) t.useq[j - 1] = demazure_quotient(t.useq[j], beta.letters[j - 1]);
  for (int j = 1; j <= k; ++j)
    if (t.useq[j] == t.useq[j - 1]) t.J.push_back(j);
  t.nonempty = t.useq[0].is_identity();
  return t;
}

bool is_nonempty(const Permutation& u, const BraidWord& beta) {
  return demazure_trace(u, beta).nonempty;
}

std::vector<int64_t> reflect(int i, const std::vector<int64_t>& v) {
  int len = static_cast<int>(v.size());
  if (i < 1 || i > len) throw InvalidInput("reflection index out of range");
  std::vector<int64_t> r = v;
  int64_t left = (i - 2 >= 0) ? v[i - 2] : 0;
  int64_t right = (i < len) ? v[i] : 0;
  r[i - 1] = checked_add(checked_sub(left, v[i - 1]), right);
  return r;
}

int64_t boundary_form_twice(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  if (a.size() != b.size()) throw InvalidInput("boundary form vectors have different lengths");
  int len = static_cast<int>(a.size());
  int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    if (a[i] == 0) continue;
    // 2*M_{ii} = -2, 2*M_{i,i+-1} = 1
    total = checked_add(total, checked_mul(a[i], checked_mul(-2, b[i])));
    if (i > 0) total = checked_add(total, checked_mul(a[i], b[i - 1]));
    if (i + 1 < len) total = checked_add(total, checked_mul(a[i], b[i + 1]));
  }
  return total;
}

Dyadic boundary_form(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  return Dyadic::from_twice(boundary_form_twice(a, b));
}

std::vector<int> reduced_word(const Permutation& p) {
  std::vector<int> word;
  Permutation cur = p;
  while (!cur.is_identity()) {
    Permutation inv = cur.inverse();
    int pick = 0;
    for (int i = 1; i < cur.n(); ++i) {
      if (inv(i) > inv(i + 1)) {  // left descent: ell(s_i cur) < ell(cur)
        pick = i;
        break;
      }
    }
    word.push_back(pick);
    cur = cur.s_times(pick);
  }
  return word;
}

}  // namespace braidseed
