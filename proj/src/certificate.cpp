#include "reylie/certificate.hpp"

#include <sstream>

namespace reylie {

Certificate Certificate::ok(std::string check, std::string condition) {
  Certificate c;
  c.check = std::move(check);
  c.condition = std::move(condition);
  return c;
}

Certificate Certificate::failure(std::string check, std::string condition, std::string note) {
  Certificate c;
  c.check = std::move(check);
  c.pass = false;
  c.condition = std::move(condition);
  c.violations = 1;
  c.note = std::move(note);
  return c;
}

std::string to_string(const Certificate& c) {
  std::ostringstream os;
  os << c.check << ": " << (c.pass ? "PASS" : "FAIL");
  if (!c.pass) {
    if (!c.condition.empty()) os << " [" << c.condition << "]";
    if (!c.indices.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < c.indices.size(); ++i) os << (i ? "," : "") << c.indices[i];
      os << ")";
    }
    if (!c.residual.empty()) {
      os << " residual [";
      for (std::size_t i = 0; i < c.residual.size(); ++i) os << (i ? "," : "") << c.residual[i];
      os << "]";
    }
    os << " violations=" << c.violations;
  }
  if (c.skipped) os << " skipped=" << c.skipped;
  if (!c.note.empty()) os << " (" << c.note << ")";
  return os.str();
}

ViolationRecorder::ViolationRecorder(std::string check, std::string condition, CheckOptions opts)
    : opts_(opts) {
  cert_.check = std::move(check);
  cert_.condition = std::move(condition);
}

bool ViolationRecorder::hit(const std::vector<std::int64_t>& indices, std::vector<Rat> residual) {
  if (cert_.pass) {
    cert_.pass = false;
    cert_.indices = indices;
    cert_.residual = std::move(residual);
  }
  ++cert_.violations;
  if (opts_.first_only) stop_ = true;
  return stop_;
}

bool ViolationRecorder::record(const std::vector<std::int64_t>& indices, const Vec& residual) {
  if (residual.is_zero()) return false;
  auto cs = residual.coords();
  return hit(indices, std::vector<Rat>(cs.begin(), cs.end()));
}

bool ViolationRecorder::record(const std::vector<std::int64_t>& indices, const Mat& residual) {
  for (std::size_t c = 0; c < residual.cols(); ++c) {
    Vec col = residual.column(c);
    if (col.is_zero()) continue;
    auto idx = indices;
    idx.push_back(static_cast<std::int64_t>(c));
    auto cs = col.coords();
    return hit(idx, std::vector<Rat>(cs.begin(), cs.end()));
  }
  return false;
}

bool ViolationRecorder::record(const std::vector<std::int64_t>& indices, const Tensor2& residual) {
  if (residual.is_zero()) return false;
  std::vector<Rat> flat;
  for (const auto& [k, c] : residual.entries()) {
    flat.emplace_back(static_cast<std::int64_t>(k.first));
    flat.emplace_back(static_cast<std::int64_t>(k.second));
    flat.push_back(c);
  }
  return hit(indices, std::move(flat));
}

bool ViolationRecorder::record(const std::vector<std::int64_t>& indices, const Tensor3& residual) {
  if (residual.is_zero()) return false;
  std::vector<Rat> flat;
  for (const auto& [k, c] : residual.entries()) {
    for (auto x : k) flat.emplace_back(static_cast<std::int64_t>(x));
    flat.push_back(c);
  }
  return hit(indices, std::move(flat));
}

Certificate all_of(const std::string& check, std::initializer_list<std::function<Certificate()>> parts) {
  std::size_t skipped = 0;
  for (const auto& part : parts) {
    Certificate c = part();
    skipped += c.skipped;
    if (!c.pass) {
      if (c.condition.empty()) c.condition = c.check;
      c.check = check;
      c.skipped = skipped;
      return c;
    }
  }
  Certificate c = Certificate::ok(check);
  c.skipped = skipped;
  return c;
}

} // namespace reylie
