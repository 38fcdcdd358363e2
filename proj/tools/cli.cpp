#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <memory>
#include <numbers>
#include <ostream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fslab/fslab.h"

namespace fslab::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kSharpTolerance = 1e-8;
constexpr double kSpotcheckRadius = 0.3;
constexpr std::size_t kSpotcheckGrid = 64;

/// Thrown when the library reports a domain problem; maps to kExitDomain.
struct DomainFailure {
    std::string message;
};

struct ParamsDeleter {
    void operator()(fslab_params* p) const { fslab_params_destroy(p); }
};
struct MemberDeleter {
    void operator()(fslab_member* m) const { fslab_member_destroy(m); }
};
using ParamsHandle = std::unique_ptr<fslab_params, ParamsDeleter>;
using MemberHandle = std::unique_ptr<fslab_member, MemberDeleter>;

void check(fslab_status status) {
    if (status == FSLAB_OK)
        return;
    throw DomainFailure{fslab_last_error()};
}

double parse_decimal(std::string_view text) {
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value))
        throw UsageError{"malformed number '" + std::string(text) + "'"};
    return value;
}

json complex_json(double re, double im) {
    return json::array({re, im});
}

struct ClassFlags {
    std::string lambda = "0";
    std::string delta = "0";
    std::string alpha = "0";
    std::string beta = "0";

    void add_to(CLI::App* app) {
        app->add_option("--lambda", lambda, "lambda in [0, 1]");
        app->add_option("--delta", delta, "delta in [0, lambda]");
        app->add_option("--alpha", alpha, "alpha in [0, 1)");
        app->add_option("--beta", beta, "beta in [0, 1)");
    }

    ParamsHandle make() const {
        fslab_params* raw = nullptr;
        check(fslab_params_create(parse_real(lambda), parse_real(delta), parse_real(alpha), parse_real(beta), &raw));
        return ParamsHandle(raw);
    }
};

struct ParamValues {
    double lambda, delta, alpha, beta, tau, sigma;
};

ParamValues values_of(const fslab_params* p) {
    ParamValues v{};
    check(fslab_params_get(p, &v.lambda, &v.delta, &v.alpha, &v.beta, &v.tau, &v.sigma));
    return v;
}

double real_mu(const std::string& text, const char* command) {
    const auto mu = parse_mu(text);
    if (mu.imag() != 0.0)
        throw UsageError{std::string("complex mu is not accepted by '") + command + "'"};
    return mu.real();
}

json bound_json(const fslab_bound_report& r, const ParamValues& v) {
    json j;
    j["format"] = 1;
    j["tau"] = v.tau;
    j["sigma"] = v.sigma;
    j["mu"] = r.mu;
    j["case"] = r.case_id;
    j["breakpoints"] = json::array({r.breakpoints[0], r.breakpoints[1], r.breakpoints[2]});
    j["value"] = r.value;
    j["scaled_value"] = r.scaled_value;
    return j;
}

std::vector<fslab_atom> parse_atoms(const std::string& text) {
    std::vector<fslab_atom> atoms;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos)
            throw UsageError{"atom '" + std::string(item) + "' is not of the form weight:angle"};
        atoms.push_back({parse_real(item.substr(0, colon)), parse_angle(item.substr(colon + 1))});
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
        if (rest.empty())
            throw UsageError{"trailing comma in atom list"};
    }
    if (atoms.empty())
        throw UsageError{"atom list is empty"};
    return atoms;
}

json atoms_json(const fslab_member* m, int which) {
    std::size_t count = 0;
    check(fslab_member_atoms(m, which, nullptr, 0, &count));
    std::vector<fslab_atom> atoms(count);
    check(fslab_member_atoms(m, which, atoms.data(), atoms.size(), &count));
    json arr = json::array();
    for (const auto& a : atoms)
        arr.push_back({{"weight", a.weight}, {"angle", a.angle}});
    return arr;
}

json verify_json(const fslab_verify_report& r, const fslab_member* best) {
    json j;
    if (r.mu_im == 0.0)
        j["mu"] = r.mu_re;
    else
        j["mu"] = complex_json(r.mu_re, r.mu_im);
    j["bound"] = r.bound;
    j["best_value"] = r.best_value;
    j["margin"] = r.margin;
    j["attained"] = r.attained != 0;
    j["evaluations"] = r.evaluations;
    if (best)
        j["best_member"] = {{"p_atoms", atoms_json(best, 0)}, {"q_atoms", atoms_json(best, 1)}};
    return j;
}

} // namespace

double parse_real(std::string_view text) {
    if (text.find_first_of(" \t\n") != std::string_view::npos)
        throw UsageError{"whitespace is not allowed in '" + std::string(text) + "'"};
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return parse_decimal(text);
    const double num = parse_decimal(text.substr(0, slash));
    const double den = parse_decimal(text.substr(slash + 1));
    if (den == 0.0)
        throw UsageError{"zero denominator in '" + std::string(text) + "'"};
    return num / den;
}

double parse_angle(std::string_view text) {
    const auto pos = text.find("pi");
    if (pos == std::string_view::npos)
        return parse_real(text);
    const std::string_view prefix = text.substr(0, pos);
    const std::string_view suffix = text.substr(pos + 2);
    double factor = 1.0;
    if (prefix == "-")
        factor = -1.0;
    else if (!prefix.empty() && prefix != "+")
        factor = parse_real(prefix);
    double value = factor * std::numbers::pi;
    if (!suffix.empty()) {
        if (suffix.front() != '/')
            throw UsageError{"malformed angle '" + std::string(text) + "'"};
        const double den = parse_decimal(suffix.substr(1));
        if (den == 0.0)
            throw UsageError{"zero denominator in '" + std::string(text) + "'"};
        value /= den;
    }
    return value;
}

std::complex<double> parse_mu(std::string_view text) {
    if (text.empty())
        throw UsageError{"empty mu literal"};
    if (text.find_first_of(" \t\n") != std::string_view::npos)
        throw UsageError{"whitespace is not allowed in mu literal '" + std::string(text) + "'"};
    if (text.back() != 'i')
        return {parse_real(text), 0.0};

    const std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    const std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);
    double im = 0.0;
    if (im_text.empty() || im_text == "+")
        im = 1.0;
    else if (im_text == "-")
        im = -1.0;
    else
        im = parse_real(im_text);
    const double re = re_text.empty() ? 0.0 : parse_real(re_text);
    return {re, im};
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        std::optional<std::string> threads_env) {
    CLI::App app{"Fekete-Szego bounds and verification for K_{lambda,delta}(alpha,beta)", "fslab"};
    app.require_subcommand(1);

    // bound
    ClassFlags bound_flags;
    std::string bound_mu;
    bool bound_complex = false;
    auto* bound_cmd = app.add_subcommand("bound", "Evaluate the bound at one mu");
    bound_flags.add_to(bound_cmd);
    bound_cmd->add_option("--mu", bound_mu, "mu (real, or a+bi with --complex)")->required();
    bound_cmd->add_flag("--complex", bound_complex, "Use the complex-mu triangle bound");

    // sweep
    ClassFlags sweep_flags;
    std::string sweep_min = "-2", sweep_max = "3";
    unsigned sweep_steps = 100;
    std::string sweep_output = "csv";
    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate the bound over a mu range");
    sweep_flags.add_to(sweep_cmd);
    sweep_cmd->add_option("--mu-min", sweep_min, "First mu");
    sweep_cmd->add_option("--mu-max", sweep_max, "Last mu");
    sweep_cmd->add_option("--steps", sweep_steps, "Number of intervals (rows = steps + 1)");
    sweep_cmd->add_option("--output", sweep_output, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    // verify
    ClassFlags verify_flags;
    std::optional<std::string> verify_mu;
    fslab_budget budget;
    fslab_budget_default(&budget);
    auto* verify_cmd = app.add_subcommand("verify", "Search for members exceeding the bound");
    verify_flags.add_to(verify_cmd);
    verify_cmd->add_option("--mu", verify_mu, "mu (real or a+bi); default: one mu per branch");
    verify_cmd->add_option("--samples", budget.n_samples, "Random restarts");
    verify_cmd->add_option("--refine", budget.n_refine, "Refinement passes");
    verify_cmd->add_option("--max-atoms", budget.max_atoms, "Atoms per measure");
    verify_cmd->add_option("--seed", budget.seed, "Master seed");

    // sharp
    ClassFlags sharp_flags;
    std::string sharp_mu;
    auto* sharp_cmd = app.add_subcommand("sharp", "Check that the extremal member attains the bound");
    sharp_flags.add_to(sharp_cmd);
    sharp_cmd->add_option("--mu", sharp_mu, "Real mu")->required();

    // reduce
    std::string preset_name_text, reduce_mu, reduce_lambda = "0", reduce_alpha = "0", reduce_beta = "0";
    auto* reduce_cmd = app.add_subcommand("reduce", "Compare a special-case preset with the general bound");
    reduce_cmd->add_option("--preset", preset_name_text, "keogh-merkes, darus-thomas, al-abbadi-darus, ad2")
        ->required();
    reduce_cmd->add_option("--mu", reduce_mu, "Real mu")->required();
    reduce_cmd->add_option("--lambda", reduce_lambda, "lambda (al-abbadi-darus, ad2)");
    reduce_cmd->add_option("--alpha", reduce_alpha, "alpha (darus-thomas, ad2)");
    reduce_cmd->add_option("--beta", reduce_beta, "beta (darus-thomas, al-abbadi-darus, ad2)");

    // member
    ClassFlags member_flags;
    std::string p_atoms_text, q_atoms_text;
    std::optional<std::string> member_mu;
    std::size_t member_order = 8;
    auto* member_cmd = app.add_subcommand("member", "Coefficient table of the member built from two measures");
    member_flags.add_to(member_cmd);
    member_cmd->add_option("--p-atoms", p_atoms_text, "w:theta,... for p")->required();
    member_cmd->add_option("--q-atoms", q_atoms_text, "w:theta,... for q")->required();
    member_cmd->add_option("--order", member_order, "Truncation order (>= 3)");
    member_cmd->add_option("--mu", member_mu, "Also report a_3 - mu a_2^2 (real mu)");

    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "fslab: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*bound_cmd) {
            auto params = bound_flags.make();
            const auto mu = parse_mu(bound_mu);
            if (bound_complex) {
                double value = 0.0, scaled = 0.0;
                check(fslab_bound_complex(params.get(), mu.real(), mu.imag(), &value, &scaled));
                json j;
                j["format"] = 1;
                j["mu"] = complex_json(mu.real(), mu.imag());
                j["value"] = value;
                j["scaled_value"] = scaled;
                out << j.dump(2) << "\n";
                return kExitOk;
            }
            if (mu.imag() != 0.0)
                throw DomainFailure{"complex mu requires --complex"};
            fslab_bound_report r;
            check(fslab_bound_real(params.get(), mu.real(), &r));
            out << bound_json(r, values_of(params.get())).dump(2) << "\n";
            return kExitOk;
        }

        if (*sweep_cmd) {
            auto params = sweep_flags.make();
            const double lo = real_mu(sweep_min, "sweep");
            const double hi = real_mu(sweep_max, "sweep");
            if (sweep_steps == 0)
                throw UsageError{"--steps must be positive"};
            json rows = json::array();
            if (sweep_output == "csv")
                out << "mu,case,value,scaled_value,complex_bound\n";
            for (unsigned i = 0; i <= sweep_steps; ++i) {
                const double mu = i == sweep_steps ? hi : lo + (hi - lo) * static_cast<double>(i) / sweep_steps;
                fslab_bound_report r;
                check(fslab_bound_real(params.get(), mu, &r));
                double complex_value = 0.0;
                check(fslab_bound_complex(params.get(), mu, 0.0, &complex_value, nullptr));
                if (sweep_output == "csv") {
                    out << format_double(mu) << ',' << r.case_id << ',' << format_double(r.value) << ','
                        << format_double(r.scaled_value) << ',' << format_double(complex_value) << '\n';
                } else {
                    rows.push_back({{"mu", mu},
                                    {"case", r.case_id},
                                    {"value", r.value},
                                    {"scaled_value", r.scaled_value},
                                    {"complex_bound", complex_value}});
                }
            }
            if (sweep_output == "json")
                out << json{{"format", 1}, {"rows", rows}}.dump(2) << "\n";
            return kExitOk;
        }

        if (*verify_cmd) {
            auto params = verify_flags.make();
            if (threads_env) {
                try {
                    const double t = parse_decimal(*threads_env);
                    if (t >= 1.0 && t == std::floor(t))
                        budget.threads = static_cast<uint32_t>(t);
                    else
                        err << "fslab: ignoring FSLAB_THREADS=" << *threads_env << "\n";
                } catch (const UsageError&) {
                    err << "fslab: ignoring FSLAB_THREADS=" << *threads_env << "\n";
                }
            }
            std::vector<std::complex<double>> mus;
            if (verify_mu) {
                mus.push_back(parse_mu(*verify_mu));
            } else {
                fslab_bound_report r;
                check(fslab_bound_real(params.get(), 0.0, &r));
                const double m1 = r.breakpoints[0], m2 = r.breakpoints[1], m3 = r.breakpoints[2];
                for (double mu : {m1 - 1.0, m1, 0.5 * (m1 + m2), m2, 0.5 * (m2 + m3), m3, m3 + 1.0})
                    mus.emplace_back(mu, 0.0);
            }
            json reports = json::array();
            int violations = 0;
            for (const auto& mu : mus) {
                fslab_verify_report r;
                fslab_member* raw_best = nullptr;
                const fslab_status st = fslab_verify(params.get(), mu.real(), mu.imag(), &budget, &r, &raw_best);
                MemberHandle best(raw_best);
                if (st == FSLAB_ERR_VIOLATION) {
                    ++violations;
                    err << "fslab: violation at mu = " << format_double(mu.real())
                        << (mu.imag() != 0.0 ? " + " + format_double(mu.imag()) + "i" : std::string()) << ": "
                        << format_double(r.best_value) << " > " << format_double(r.bound) << "\n";
                } else {
                    check(st);
                }
                json entry = verify_json(r, best.get());
                entry["violation"] = st == FSLAB_ERR_VIOLATION;
                reports.push_back(std::move(entry));
            }
            json j;
            j["format"] = 1;
            j["samples"] = budget.n_samples;
            j["refine"] = budget.n_refine;
            j["max_atoms"] = budget.max_atoms;
            j["seed"] = budget.seed;
            if (verify_mu) {
                for (auto& [key, value] : reports[0].items())
                    j[key] = value;
            } else {
                j["reports"] = reports;
                j["violations"] = violations;
            }
            out << j.dump(2) << "\n";
            return violations == 0 ? kExitOk : kExitVerification;
        }

        if (*sharp_cmd) {
            auto params = sharp_flags.make();
            const double mu = real_mu(sharp_mu, "sharp");
            fslab_sharpness s;
            check(fslab_sharpness_check(params.get(), mu, &s));
            json j;
            j["format"] = 1;
            j["mu"] = mu;
            j["case"] = s.case_id;
            j["bound"] = s.bound;
            j["attained_value"] = s.attained_value;
            j["residual"] = s.residual;
            out << j.dump(2) << "\n";
            return std::abs(s.residual) <= kSharpTolerance ? kExitOk : kExitVerification;
        }

        if (*reduce_cmd) {
            fslab_preset preset;
            if (fslab_preset_from_name(preset_name_text.c_str(), &preset) != FSLAB_OK)
                throw UsageError{"unknown preset '" + preset_name_text + "'"};
            const double mu = real_mu(reduce_mu, "reduce");
            const double lambda = parse_real(reduce_lambda);
            const double alpha = parse_real(reduce_alpha);
            const double beta = parse_real(reduce_beta);
            double preset_value = 0.0;
            check(fslab_reduction_bound(preset, lambda, alpha, beta, mu, &preset_value));

            ParamsHandle params;
            {
                fslab_params* raw = nullptr;
                check(fslab_params_create(lambda, 0.0, alpha, beta, &raw));
                params.reset(raw);
            }
            fslab_bound_report r;
            check(fslab_bound_real(params.get(), mu, &r));
            json j;
            j["format"] = 1;
            j["preset"] = preset_name_text;
            j["mu"] = mu;
            j["lambda"] = lambda;
            j["delta"] = 0.0;
            j["alpha"] = alpha;
            j["beta"] = beta;
            j["case"] = r.case_id;
            j["preset_value"] = preset_value;
            j["bound_real_value"] = r.value;
            j["difference"] = preset_value - r.value;
            j["value"] = preset_value;
            if (preset == FSLAB_PRESET_KEOGH_MERKES)
                j["note"] = "middle branch evaluated as 1/3 + 4/(9 mu); the form 1/3 - 4/(9 mu) is "
                            "negative at mu = 1/3 and discontinuous at both ends of [1/3, 2/3]";
            out << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*member_cmd) {
            auto params = member_flags.make();
            const auto p_atoms = parse_atoms(p_atoms_text);
            const auto q_atoms = parse_atoms(q_atoms_text);
            fslab_member* raw = nullptr;
            check(fslab_member_create(params.get(), p_atoms.data(), p_atoms.size(), q_atoms.data(), q_atoms.size(),
                                      member_order, &raw));
            MemberHandle member(raw);
            const std::size_t n = fslab_member_order(member.get()) + 1;
            auto seq = [&](fslab_sequence which) {
                std::vector<double> re(n), im(n);
                check(fslab_member_sequence(member.get(), which, re.data(), im.data(), n));
                return std::pair{re, im};
            };
            const auto a = seq(FSLAB_SEQ_A), b = seq(FSLAB_SEQ_B), c = seq(FSLAB_SEQ_C), q = seq(FSLAB_SEQ_Q),
                       d = seq(FSLAB_SEQ_D), lib = seq(FSLAB_SEQ_LIBERA);
            json table = json::array();
            for (std::size_t k = 1; k < n; ++k) {
                table.push_back({{"k", k},
                                 {"a", complex_json(a.first[k], a.second[k])},
                                 {"b", complex_json(b.first[k], b.second[k])},
                                 {"c", complex_json(c.first[k], c.second[k])},
                                 {"q", complex_json(q.first[k], q.second[k])},
                                 {"d", d.first[k]},
                                 {"libera", complex_json(lib.first[k], lib.second[k])}});
            }
            const auto v = values_of(params.get());
            int passed = 0;
            check(fslab_member_spotcheck(member.get(), kSpotcheckRadius, kSpotcheckGrid, &passed));
            json j;
            j["format"] = 1;
            j["order"] = n - 1;
            j["tau"] = v.tau;
            j["sigma"] = v.sigma;
            j["p_atoms"] = atoms_json(member.get(), 0);
            j["q_atoms"] = atoms_json(member.get(), 1);
            j["coefficients"] = table;
            j["membership_spotcheck"] = passed != 0;
            if (member_mu) {
                const double mu = real_mu(*member_mu, "member");
                double re = 0.0, im = 0.0;
                check(fslab_member_fs(member.get(), mu, 0.0, &re, &im));
                j["fs_functional"] = complex_json(re, im);
            }
            out << j.dump(2) << "\n";
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "fslab: " << e.message << "\n";
        return kExitUsage;
    } catch (const DomainFailure& e) {
        err << "fslab: " << e.message << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

} // namespace fslab::cli
