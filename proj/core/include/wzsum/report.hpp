#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wzsum {

enum class Status { pass, fail, skipped };

std::string_view status_name(Status s);

/// One checked equation: both sides rendered as exact rationals (or, for the
/// symbolic WZ check, as a canonical rational function against "0").
struct CheckRow {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;  // name -> rendered value, fixed order
  std::optional<long> n;
  std::string lhs;
  std::string rhs;
  Status status = Status::pass;
  std::string reason;
};

struct Summary {
  long pass = 0;
  long fail = 0;
  long skipped = 0;

  void count(Status s) {
    if (s == Status::pass) ++pass;
    else if (s == Status::fail) ++fail;
    else ++skipped;
  }
  Summary& operator+=(const Summary& o) {
    pass += o.pass;
    fail += o.fail;
    skipped += o.skipped;
    return *this;
  }
};

inline Summary summarize(const std::vector<CheckRow>& rows) {
  Summary s;
  for (const auto& r : rows) s.count(r.status);
  return s;
}

}  // namespace wzsum
