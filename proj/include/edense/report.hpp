#ifndef EDENSE_REPORT_HPP_
#define EDENSE_REPORT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace edense {

  // One named check; the witness is only meaningful on failure.
  struct Finding {
    std::string name;
    bool        pass;
    std::string witness;
  };

  struct Report {
    std::vector<Finding> findings;

    void add(std::string name, bool pass, std::string witness = {}) {
      findings.push_back({std::move(name), pass, std::move(witness)});
    }

    void append(Report const& that) {
      findings.insert(
          findings.end(), that.findings.begin(), that.findings.end());
    }

    bool all_pass() const noexcept {
      for (auto const& f : findings) {
        if (!f.pass) {
          return false;
        }
      }
      return true;
    }

    std::size_t failures() const noexcept {
      std::size_t count = 0;
      for (auto const& f : findings) {
        count += f.pass ? 0 : 1;
      }
      return count;
    }
  };

}  // namespace edense

#endif  // EDENSE_REPORT_HPP_
