#pragma once

// Per-instance verification ledger: an ordered list of named checks with
// the method that produced each verdict. Certificates are deterministic;
// re-running an instance reproduces them byte for byte.

#include <string>
#include <vector>

namespace negaconv {

enum class CheckStatus { kPass, kFail, kSkipped, kInfo };

struct Check {
  std::string name;
  std::string method;
  CheckStatus status = CheckStatus::kInfo;
  std::string detail;
  bool mandatory = true;
};

struct VerificationCertificate {
  std::vector<Check> checks;

  void add(std::string name, std::string method, CheckStatus status, std::string detail,
           bool mandatory = true) {
    checks.push_back({std::move(name), std::move(method), status, std::move(detail), mandatory});
  }
  void pass(std::string name, std::string method, std::string detail = "") {
    add(std::move(name), std::move(method), CheckStatus::kPass, std::move(detail));
  }
  void fail(std::string name, std::string method, std::string detail = "") {
    add(std::move(name), std::move(method), CheckStatus::kFail, std::move(detail));
  }
  void require(std::string name, std::string method, bool ok, std::string detail = "") {
    add(std::move(name), std::move(method), ok ? CheckStatus::kPass : CheckStatus::kFail,
        std::move(detail));
  }
  void info(std::string name, std::string method, std::string detail = "") {
    add(std::move(name), std::move(method), CheckStatus::kInfo, std::move(detail), false);
  }
  // a skipped mandatory check fails the certificate
  void skipped(std::string name, std::string method, std::string detail, bool mandatory = true) {
    add(std::move(name), std::move(method), CheckStatus::kSkipped, std::move(detail), mandatory);
  }

  bool overall_pass() const {
    for (const Check& c : checks) {
      if (!c.mandatory) continue;
      if (c.status == CheckStatus::kFail || c.status == CheckStatus::kSkipped) return false;
    }
    return true;
  }

  std::string to_text() const;
};

const char* to_string(CheckStatus s);

}  // namespace negaconv
