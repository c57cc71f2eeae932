#include "adelic/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

namespace adelic {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double fit_slope(const std::vector<ScheduleRow>& rows, std::size_t skip) {
    // least squares of log(rel_err) on log(V); rows below the rounding noise
    // floor carry no truncation signal and are left out
    constexpr double kNoiseFloor = 1e-11;
    std::vector<double> xs, ys;
    for (std::size_t i = skip; i < rows.size(); ++i) {
        if (!(rows[i].rel_err > kNoiseFloor) || !std::isfinite(rows[i].rel_err))
            continue;
        xs.push_back(std::log((double)rows[i].cutoff));
        ys.push_back(std::log(rows[i].rel_err));
    }
    if (xs.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return num / den;
}

void finalize_report(VerificationReport& report) {
    report.slope = fit_slope(report.rows);
    report.pass = !report.rows.empty() &&
                  std::isfinite(report.final_rel_err()) &&
                  report.final_rel_err() <= report.tolerance;
}

void VerificationReport::write_csv(std::ostream& os) const {
    os << "V,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err\n";
    for (const auto& r : rows) {
        os << r.cutoff << ',' << format_g17(r.lhs.real()) << ','
           << format_g17(r.lhs.imag()) << ',' << format_g17(r.rhs.real()) << ','
           << format_g17(r.rhs.imag()) << ',' << format_g17(r.abs_err) << ','
           << format_g17(r.rel_err) << '\n';
    }
}

std::string VerificationReport::to_json() const {
    std::ostringstream os;
    os << "{\n  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        os << "    {\"V\": " << r.cutoff << ", \"lhs_re\": " << format_g17(r.lhs.real())
           << ", \"lhs_im\": " << format_g17(r.lhs.imag())
           << ", \"rhs_re\": " << format_g17(r.rhs.real())
           << ", \"rhs_im\": " << format_g17(r.rhs.imag())
           << ", \"abs_err\": " << format_g17(r.abs_err)
           << ", \"rel_err\": " << format_g17(r.rel_err) << "}";
        os << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "  ],\n";
    os << "  \"tolerance\": " << format_g17(tolerance) << ",\n";
    os << "  \"final_rel_err\": " << format_g17(rows.empty() ? 0.0 : final_rel_err())
       << ",\n";
    os << "  \"slope\": "
       << (std::isfinite(slope) ? format_g17(slope) : std::string("null")) << ",\n";
    os << "  \"pass\": " << (pass ? "true" : "false") << "\n}\n";
    return os.str();
}

}  // namespace adelic
