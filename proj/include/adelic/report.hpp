#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "adelic/types.hpp"

namespace adelic {

struct ScheduleRow {
    long long cutoff = 0;
    Cplx lhs{0.0, 0.0};
    Cplx rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
};

// Per-cutoff trace of a verification run plus the final verdict. The slope
// is a least-squares fit of log(rel_err) against log(cutoff), skipping the
// first three rows (early transient); NaN when the fit is not meaningful.
struct VerificationReport {
    std::vector<ScheduleRow> rows;
    double tolerance = 0.0;
    bool pass = false;
    double slope = 0.0;

    const ScheduleRow& final_row() const { return rows.back(); }
    double final_rel_err() const { return rows.back().rel_err; }

    // CSV with header V,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err; numbers
    // formatted with 17 significant digits so files are byte-stable.
    void write_csv(std::ostream& os) const;
    std::string to_json() const;
};

// 17-significant-digit decimal formatting (round-trips binary64).
std::string format_g17(double x);

double fit_slope(const std::vector<ScheduleRow>& rows, std::size_t skip = 3);

void finalize_report(VerificationReport& report);

}  // namespace adelic
