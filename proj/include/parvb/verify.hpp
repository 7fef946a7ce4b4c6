#ifndef PARVB_VERIFY_HPP
#define PARVB_VERIFY_HPP

#include <string>
#include <vector>

namespace parvb {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    long ms = 0;
    std::string detail;
};

// Runs the twelve acceptance criteria. `ns` restricts the point counts for
// the criteria that range over n (defaults to 5..10 when empty); criteria
// pinned to specific n values fall back to those when the restriction would
// leave them empty.
std::vector<CriterionResult> run_acceptance(std::vector<int> ns);

}  // namespace parvb

#endif
