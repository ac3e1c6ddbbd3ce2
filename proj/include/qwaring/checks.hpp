#ifndef QWARING_CHECKS_HPP
#define QWARING_CHECKS_HPP

#include <string>
#include <vector>

namespace qw {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// The full reproduction suite, one entry per criterion, in order.
std::vector<CriterionResult> run_all_checks();

}  // namespace qw

#endif
