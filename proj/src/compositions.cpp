#include "lorentzvol/compositions.hpp"

#include <stdexcept>
#include <string>

namespace lorentzvol {

CompositionEnumerator::CompositionEnumerator(int n, int cap) : n_(n) {
  if (n < 1) throw std::invalid_argument("CompositionEnumerator: n must be >= 1");
  if (n > cap)
    throw std::invalid_argument("CompositionEnumerator: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap) + " (|K_n| = 2^" +
                                std::to_string(n - 1) + " items)");
  cur_.reserve(n);
}

bool CompositionEnumerator::next(Composition& out) {
  if (done_) return false;
  if (!started_) {
    cur_.assign(n_, 1);
    started_ = true;
  } else if (cur_.size() == 1) {
    done_ = true;
    return false;
  } else {
    // Lexicographic successor: bump the second-to-last part, respread the
    // remainder of the last part as trailing ones.
    int last = cur_.back();
    cur_.pop_back();
    cur_.back() += 1;
    cur_.insert(cur_.end(), static_cast<size_t>(last - 1), 1);
  }

  out.parts.assign(cur_.begin(), cur_.end());
  out.n = n_;
  out.length = static_cast<int>(cur_.size());
  out.partial_sums.clear();
  out.partial_sums.reserve(out.length + 1);
  int acc = 0;
  out.partial_sums.push_back(0);
  for (int part : cur_) {
    acc += part;
    out.partial_sums.push_back(acc);
  }
  return true;
}

}  // namespace lorentzvol
