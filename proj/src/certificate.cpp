#include "negaconv/certificate.hpp"

#include <sstream>

namespace negaconv {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kSkipped: return "skipped";
    case CheckStatus::kInfo: return "info";
  }
  return "?";
}

std::string VerificationCertificate::to_text() const {
  std::ostringstream os;
  for (const Check& c : checks) {
    os << "[" << to_string(c.status) << "] " << c.name << " (" << c.method << ")";
    if (!c.detail.empty()) os << ": " << c.detail;
    if (!c.mandatory && c.status != CheckStatus::kInfo) os << " [optional]";
    os << "\n";
  }
  os << "overall: " << (overall_pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace negaconv
