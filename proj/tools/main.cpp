// Command-line front end: local special-function values, identity
// verification sweeps, and per-cutoff convergence tables.
//
// Exit codes: 0 pass, 1 verification failed, 2 usage/parse error,
// 3 pole/domain error (error name printed on stderr).

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "adelic/archimedean.hpp"
#include "adelic/characters.hpp"
#include "adelic/engine.hpp"
#include "adelic/errors.hpp"
#include "adelic/nonarch.hpp"
#include "adelic/numberfield.hpp"
#include "adelic/oracle.hpp"

using namespace adelic;

namespace {

// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i".
Cplx parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s += c;
    if (s.empty()) throw ParseError("empty complex literal");
    auto parse_real = [](const std::string& t) -> double {
        std::size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size()) throw ParseError("trailing characters in number");
        return v;
    };
    try {
        if (s.back() != 'i') return {parse_real(s), 0.0};
        std::string body = s.substr(0, s.size() - 1);
        // find the split between real and imaginary parts: the last +/- that
        // is not a leading sign or part of an exponent
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') &&
                body[i - 1] != 'e' && body[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            if (body.empty() || body == "+") return {0.0, 1.0};
            if (body == "-") return {0.0, -1.0};
            return {0.0, parse_real(body)};
        }
        std::string im = body.substr(split);
        double imv = (im == "+") ? 1.0 : (im == "-") ? -1.0 : parse_real(im);
        return {parse_real(body.substr(0, split)), imv};
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError("cannot parse complex literal: " + text);
    }
}

std::string format_value(Cplx v) {
    char buf[80];
    if (v.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.15g", v.real());
        return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.15g%+.15gi", v.real(), v.imag());
    return buf;
}

RamifiedLocalCharacter local_component(const IdeleClassCharacter& om, long long p) {
    for (const auto& r : om.ramified())
        if (r.p == p) return r.theta;
    throw DomainError("character is unramified at p=" + std::to_string(p));
}

struct VerifyArgs {
    std::string field_spec = "Q";
    std::string char_spec = "trivial";
    std::string char2_spec;
    std::string alpha, beta;
    std::string schedule_spec = "2^8..2^17";
    double tolerance = 1e-4;
    std::string format = "csv";
    std::string out_path = "-";
    long long finite_cutoff = 0;
};

void write_report(const VerificationReport& report, const VerifyArgs& args) {
    std::ostringstream body;
    if (args.format == "json")
        body << report.to_json();
    else
        report.write_csv(body);
    if (args.out_path == "-" || args.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out) throw ParseError("cannot open output file: " + args.out_path);
        out << body.str();
    }
}

int finish_verify(const VerificationReport& report, const VerifyArgs& args) {
    write_report(report, args);
    const auto& last = report.final_row();
    std::cout << (report.pass ? "PASS" : "FAIL") << " V=" << last.cutoff
              << " rel_err=" << format_g17(last.rel_err)
              << " tol=" << format_g17(report.tolerance) << "\n";
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local gamma/beta functions and regularized product checks"};
    app.require_subcommand(1);

    // ---- local -----------------------------------------------------------
    auto* local = app.add_subcommand("local", "evaluate one local function");
    local->require_subcommand(1);
    std::string alpha_s, beta_s, char_s = "chi(m=4,k=1)";
    long long q_arg = 2, p_arg = 2;
    int nu_arg = 0;

    auto* lgr = local->add_subcommand("gamma-real", "local gamma of R");
    lgr->add_option("--alpha", alpha_s)->required();
    lgr->add_option("--nu", nu_arg);
    auto* lgc = local->add_subcommand("gamma-complex", "local gamma of C");
    lgc->add_option("--alpha", alpha_s)->required();
    lgc->add_option("--nu", nu_arg);
    auto* lgq = local->add_subcommand("gamma-q", "reduced local gamma");
    lgq->add_option("--alpha", alpha_s)->required();
    lgq->add_option("--q", q_arg);
    auto* lbq = local->add_subcommand("beta-q", "local beta");
    lbq->add_option("--alpha", alpha_s)->required();
    lbq->add_option("--beta", beta_s)->required();
    lbq->add_option("--q", q_arg);
    auto* lram = local->add_subcommand("gamma-ramified", "ramified local gamma");
    lram->add_option("--alpha", alpha_s)->required();
    lram->add_option("--char", char_s);
    lram->add_option("--p", p_arg);

    // ---- verify / converge ------------------------------------------------
    VerifyArgs vargs;
    auto add_common = [&](CLI::App* cmd, bool with_beta) {
        cmd->add_option("--field", vargs.field_spec, "Q, Q(sqrt,d), Q(zeta,m)");
        cmd->add_option("--char", vargs.char_spec, "trivial or chi(m=..,k=..)");
        if (with_beta)
            cmd->add_option("--char2", vargs.char2_spec, "second character (default --char)");
        cmd->add_option("--alpha", vargs.alpha)->required();
        if (with_beta) cmd->add_option("--beta", vargs.beta)->required();
        cmd->add_option("--schedule", vargs.schedule_spec, "2^a..2^b or comma list");
        cmd->add_option("--tol", vargs.tolerance, "relative tolerance at the final cutoff");
        cmd->add_option("--format", vargs.format)->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", vargs.out_path, "report path ('-' for stdout)");
    };
    auto* verify = app.add_subcommand("verify", "run an identity check");
    verify->require_subcommand(1);
    auto* vg = verify->add_subcommand("gamma", "regularized gamma identity");
    add_common(vg, false);
    auto* vb = verify->add_subcommand("beta", "regularized beta identity");
    add_common(vb, true);
    auto* vf = verify->add_subcommand("finite-v", "fixed-cutoff identity");
    add_common(vf, false);
    vf->add_option("--V", vargs.finite_cutoff, "single cutoff")->required();

    auto* converge = app.add_subcommand("converge", "per-cutoff table with slope column");
    add_common(converge, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (local->parsed()) {
            Cplx a = parse_complex(alpha_s);
            Cplx value;
            if (lgr->parsed()) {
                value = gamma_real(a, nu_arg);
            } else if (lgc->parsed()) {
                value = gamma_complex(a, nu_arg);
            } else if (lgq->parsed()) {
                // accept prime powers: factor q = p^f
                long long p = 2;
                while (q_arg % p) ++p;
                int f = 0;
                long long t = q_arg;
                while (t > 1 && t % p == 0) {
                    t /= p;
                    ++f;
                }
                if (t != 1 || f < 1) throw DomainError("q must be a prime power");
                value = gamma_q(a, ResidueModule::of(p, f));
            } else if (lbq->parsed()) {
                long long p = 2;
                while (q_arg % p) ++p;
                int f = 0;
                long long t = q_arg;
                while (t > 1 && t % p == 0) {
                    t /= p;
                    ++f;
                }
                if (t != 1 || f < 1) throw DomainError("q must be a prime power");
                value = beta_q(a, parse_complex(beta_s), ResidueModule::of(p, f));
            } else {
                auto om = parse_character_spec(char_s, describe_rationals());
                value = gamma_ramified(a, local_component(om, p_arg));
            }
            std::cout << format_value(value) << "\n";
            return 0;
        }

        auto field = parse_field_spec(vargs.field_spec);
        auto omega = parse_character_spec(vargs.char_spec, field);
        Cplx a = parse_complex(vargs.alpha);

        if (vg->parsed()) {
            auto sched = TruncationSchedule::parse(vargs.schedule_spec);
            return finish_verify(
                verify_gamma_identity(field, omega, a, sched, vargs.tolerance), vargs);
        }
        if (vb->parsed()) {
            auto omega2 = vargs.char2_spec.empty()
                              ? omega
                              : parse_character_spec(vargs.char2_spec, field);
            auto sched = TruncationSchedule::parse(vargs.schedule_spec);
            Cplx b = parse_complex(vargs.beta);
            return finish_verify(
                verify_beta_identity(field, omega, omega2, a, b, sched, vargs.tolerance),
                vargs);
        }
        if (vf->parsed()) {
            return finish_verify(
                finite_V_identity_check(field, omega, a, vargs.finite_cutoff,
                                        vargs.tolerance),
                vargs);
        }
        // converge: same rows as verify gamma, plus a running slope column
        auto sched = TruncationSchedule::parse(vargs.schedule_spec);
        auto report = verify_gamma_identity(field, omega, a, sched, vargs.tolerance);
        std::ostringstream body;
        body << "V,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,slope\n";
        for (std::size_t i = 0; i < report.rows.size(); ++i) {
            const auto& r = report.rows[i];
            std::vector<ScheduleRow> prefix(report.rows.begin(),
                                            report.rows.begin() + i + 1);
            double slope = fit_slope(prefix);
            body << r.cutoff << ',' << format_g17(r.lhs.real()) << ','
                 << format_g17(r.lhs.imag()) << ',' << format_g17(r.rhs.real()) << ','
                 << format_g17(r.rhs.imag()) << ',' << format_g17(r.abs_err) << ','
                 << format_g17(r.rel_err) << ','
                 << (std::isfinite(slope) ? format_g17(slope) : std::string("nan"))
                 << '\n';
        }
        if (vargs.out_path == "-" || vargs.out_path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream out(vargs.out_path, std::ios::binary);
            if (!out) throw ParseError("cannot open output file: " + vargs.out_path);
            out << body.str();
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return 2;
    } catch (const InvalidFieldSpec& e) {
        std::cerr << "InvalidFieldSpec: " << e.what() << "\n";
        return 2;
    } catch (const PoleError& e) {
        std::cerr << "PoleError: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "DomainError: " << e.what() << "\n";
        return 3;
    } catch (const NotPrimitiveError& e) {
        std::cerr << "NotPrimitiveError: " << e.what() << "\n";
        return 3;
    } catch (const RankMismatchError& e) {
        std::cerr << "RankMismatchError: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedFieldError& e) {
        std::cerr << "UnsupportedFieldError: " << e.what() << "\n";
        return 3;
    } catch (const OracleUnavailable& e) {
        std::cerr << "OracleUnavailable: " << e.what() << "\n";
        return 3;
    } catch (const AdelicError& e) {
        std::cerr << "AdelicError: " << e.what() << "\n";
        return 3;
    }
}
