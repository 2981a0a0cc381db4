#ifndef HSP_REPORT_HPP
#define HSP_REPORT_HPP

#include <string>

namespace hsp {

// Result of an exhaustive check: ok, plus either a summary or the first counterexample.
struct CheckReport {
  bool ok = true;
  std::string detail;

  static CheckReport pass(std::string d) { return {true, std::move(d)}; }
  static CheckReport fail(std::string d) { return {false, std::move(d)}; }
};

}  // namespace hsp

#endif
