#ifndef KRQ_REPORT_HPP
#define KRQ_REPORT_HPP

#include <string>
#include <vector>

namespace krq {

struct Mismatch {
    std::string item; // canonical text of the monomial or weight
    long long lhs = 0;
    long long rhs = 0;
};

struct VerifyReport {
    long long lhs_terms = 0; // distinct terms on each side
    long long rhs_terms = 0;
    bool equal = false;
    std::vector<Mismatch> mismatches; // empty iff equal
    double elapsed_ms = 0.0;
};

} // namespace krq

#endif
