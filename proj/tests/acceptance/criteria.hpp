#pragma once

#include <algorithm>
#include <string>

namespace acc {

struct Verdict {
  bool ok = true;
  std::string detail;
};

Verdict criterion_classical();
Verdict criterion_hill();
Verdict criterion_relations();
Verdict criterion_coassoc();
Verdict criterion_d2();
Verdict criterion_qeps();
Verdict criterion_twist();
Verdict criterion_decomposition();
Verdict criterion_normalization();
Verdict criterion_dlog();

}  // namespace acc
