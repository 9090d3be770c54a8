#ifndef POLYMOM_PERM_HPP
#define POLYMOM_PERM_HPP

#include <Eigen/Core>
#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "polymom/errors.hpp"

namespace polymom {

// Permutation of {0,...,n-1} in one-line notation. Composition is
// right-to-left: compose(a,b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(v)])
        raise(errc::invalid_cycle, "not a bijection");
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  static Perm identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
  }

  // The long cycle C = (1,2,...,n): j -> j+1 cyclically.
  static Perm long_cycle(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = (i + 1) % n;
    return Perm(std::move(img));
  }

  // Reversal (1,n)(2,n-1)...
  static Perm reversal(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = n - 1 - i;
    return Perm(std::move(img));
  }

  // Parses 1-based cycle notation, e.g. "(1,2,3)(4,5)" or "(1 2 3)".
  // Cycles in the product apply right to left.
  static Perm from_cycles(const std::string& text, int n) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
      if (text[i] != '(') raise(errc::invalid_cycle, "expected '(' in cycle notation");
      ++i;
      std::vector<int> cyc;
      while (i < text.size() && text[i] != ')') {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') { ++i; continue; }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          raise(errc::invalid_cycle, "bad character in cycle notation");
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          v = 10 * v + (text[i++] - '0');
        if (v < 1 || v > n) raise(errc::invalid_cycle, "cycle index out of range");
        cyc.push_back(v - 1);
      }
      if (i >= text.size()) raise(errc::invalid_cycle, "unterminated cycle");
      ++i;  // ')'
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    Perm result = Perm::identity(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      std::vector<int> img(static_cast<size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      const auto& cyc = *it;
      std::vector<char> seen(static_cast<size_t>(n), 0);
      for (size_t k = 0; k < cyc.size(); ++k) {
        if (seen[static_cast<size_t>(cyc[k])]) raise(errc::invalid_cycle, "repeated index in cycle");
        seen[static_cast<size_t>(cyc[k])] = 1;
        img[static_cast<size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
      }
      result = compose(Perm(std::move(img)), result);
    }
    return result;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const {
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) img[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    return Perm(std::move(img));
  }

  friend Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) raise(errc::invalid_cycle, "composition size mismatch");
    std::vector<int> img(a.img_.size());
    for (size_t i = 0; i < img.size(); ++i) img[i] = a.img_[static_cast<size_t>(b.img_[i])];
    return Perm(std::move(img));
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  friend std::ostream& operator<<(std::ostream& os, const Perm& p) {
    os << "[";
    for (size_t i = 0; i < p.img_.size(); ++i) os << (i ? " " : "") << p.img_[i] + 1;
    return os << "]";
  }

  // Standard permutation representation: entry 1 at (i, sigma(i)).
  Eigen::MatrixXi matrix() const {
    const int n = size();
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, img_[static_cast<size_t>(i)]) = 1;
    return m;
  }

 private:
  std::vector<int> img_;
};

// All permutations of {0..n-1} in lexicographic one-line order.
inline std::vector<Perm> all_permutations(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

struct PermPair {
  Perm sigma, tau;
  friend bool operator==(const PermPair& a, const PermPair& b) {
    return a.sigma == b.sigma && a.tau == b.tau;
  }
  friend bool operator<(const PermPair& a, const PermPair& b) {
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    return a.tau < b.tau;
  }
};

}  // namespace polymom

#endif
