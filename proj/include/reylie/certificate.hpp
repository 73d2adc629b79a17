#pragma once

#include "reylie/linalg.hpp"
#include "reylie/tensor.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace reylie {

/// Verdict of an axiom check. On failure, `indices` names the first
/// violating basis tuple (loop order is lexicographic) and `residual` is
/// the exact nonzero left-minus-right difference there.
struct Certificate {
  std::string check;
  bool pass = true;
  std::string condition;
  std::vector<std::int64_t> indices;
  std::vector<Rat> residual;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  std::string note;

  static Certificate ok(std::string check, std::string condition = {});
  static Certificate failure(std::string check, std::string condition, std::string note);

  explicit operator bool() const { return pass; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CheckOptions {
  bool first_only = false;
};

/// One-line human rendering, e.g. `jacobi: FAIL at (0,1,2) residual [0,1,0]`.
std::string to_string(const Certificate& c);

/// Accumulates violations for a single named condition.
class ViolationRecorder {
public:
  ViolationRecorder(std::string check, std::string condition, CheckOptions opts = {});

  /// Records a residual if nonzero. Returns true when the caller should stop.
  bool record(const std::vector<std::int64_t>& indices, const Vec& residual);
  /// Matrix residual: the first nonzero column is reported and its index appended.
  bool record(const std::vector<std::int64_t>& indices, const Mat& residual);
  /// Sparse residual: nonzero entries flattened as (i, j, value) triples in lexicographic order.
  bool record(const std::vector<std::int64_t>& indices, const Tensor2& residual);
  bool record(const std::vector<std::int64_t>& indices, const Tensor3& residual);
  void skip(std::size_t n = 1) { cert_.skipped += n; }

  bool done() const { return stop_; }
  void set_note(std::string note) { cert_.note = std::move(note); }
  Certificate finish() const { return cert_; }

private:
  bool hit(const std::vector<std::int64_t>& indices, std::vector<Rat> residual);
  Certificate cert_;
  CheckOptions opts_;
  bool stop_ = false;
};

/// Runs sub-checks in order and returns the first failing one under the
/// compound name; passes only when all pass.
Certificate all_of(const std::string& check, std::initializer_list<std::function<Certificate()>> parts);

} // namespace reylie
