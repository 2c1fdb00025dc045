#pragma once

// Command-line front end: spectrum, audit, wavefn and sweep subcommands.
//
// Exit codes: 0 success, 2 argument/parse error, 3 singular g, 4 a PROVEN
// identity failed, 5 eigensolver failure.

#include "ncmorse/deformed.hpp"
#include "ncmorse/morse_model.hpp"
#include "ncmorse/ncgeom.hpp"
#include "ncmorse/repr.hpp"
#include "ncmorse/tensor2d.hpp"
#include "ncmorse/wavefn.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ncmorse::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kSingular = 3,
    kProvenFailed = 4,
    kEigenFailure = 5,
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raw flag values, kept as typed so they can be echoed verbatim.
struct RawFlags {
    std::vector<std::pair<std::string, std::string>> entries;

    const std::string& get(const std::string& key) const {
        for (const auto& [k, v] : entries) {
            if (k == key) {
                return v;
            }
        }
        throw std::logic_error("unknown flag " + key);
    }
};

struct RunConfig {
    std::string subcommand;
    std::size_t dim1 = 8;
    std::size_t dim2 = 8;
    double q1 = 1.5;
    double q2 = 1.5;
    std::string g_text = "1,0;0,1";
    MorseParams params{49.0 / 8.0, 1.0, 1.0, 1.0};
    double scale = 0.5;
    double tol = kDefaultTolerance;
    double theta = 0.5;
    double sigma = 3.0;
    std::size_t n = 0;
    std::size_t samples = 4000;
    bool has_x_bounds = false;
    double x_lo = 0.0;
    double x_hi = 0.0;
    std::string entry = "g11";
    double from = 0.5;
    double to = 1.5;
    std::size_t steps = 21;
    std::string out;
    std::string format;
    RawFlags raw;
};

namespace detail {

inline double parse_double(const std::string& flag, const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v)) {
        throw UsageError("--" + flag + ": expected a number, got '" + text + "'");
    }
    return v;
}

inline std::size_t parse_count(const std::string& flag, const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const long long v = std::strtoll(begin, &end, 10);
    if (end == begin || *end != '\0' || v < 0) {
        throw UsageError("--" + flag + ": expected a nonnegative integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(v);
}

inline std::pair<std::string, std::string> split_pair(const std::string& flag, const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
        throw UsageError("--" + flag + ": expected two comma-separated values, got '" + text + "'");
    }
    return {text.substr(0, comma), text.substr(comma + 1)};
}

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows; // cells already formatted
    std::vector<std::vector<bool>> numeric;
};

inline void write_atomically(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        std::cout.flush();
        return;
    }
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        os << content;
        if (!os) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

inline nlohmann::ordered_json config_json(const RunConfig& cfg) {
    nlohmann::ordered_json c;
    c["subcommand"] = cfg.subcommand;
    for (const auto& [k, v] : cfg.raw.entries) {
        c[k] = v;
    }
    return c;
}

inline std::string render_table(const RunConfig& cfg, const Table& t) {
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["config"] = config_json(cfg);
        j["columns"] = t.columns;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
                if (t.numeric[r][c]) {
                    row.push_back(std::strtod(t.rows[r][c].c_str(), nullptr));
                } else {
                    row.push_back(t.rows[r][c]);
                }
            }
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        os << (c ? "," : "") << t.columns[c];
    }
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << (c ? "," : "") << row[c];
        }
        os << "\n";
    }
    return os.str();
}

inline Generator2DSet make_generators(const RunConfig& cfg) {
    return build_2d_generators(Representation{cfg.dim1, cfg.q1}, Representation{cfg.dim2, cfg.q2});
}

inline int run_spectrum(const RunConfig& cfg) {
    const DeformedSet ds(make_generators(cfg), parse_deformation(cfg.g_text));
    const SpectrumResult sp = spectrum(deformed_hamiltonian(ds, cfg.scale));
    Table t{{"index", "re", "im"}, {}, {}};
    for (std::size_t k = 0; k < sp.eigenvalues.size(); ++k) {
        t.rows.push_back({std::to_string(k), fmt17(sp.eigenvalues[k].real()), fmt17(sp.eigenvalues[k].imag())});
        t.numeric.push_back({true, true, true});
    }
    write_atomically(cfg.out, render_table(cfg, t));
    return kOk;
}

inline std::vector<IdentityReport> collect_audit(const RunConfig& cfg) {
    if (cfg.dim1 < 4 || cfg.dim2 < 4) {
        throw UsageError("audit: --dims must be at least 4 per axis (three-ladder identities need the margin)");
    }
    const Representation rep1{cfg.dim1, cfg.q1};
    const Representation rep2{cfg.dim2, cfg.q2};
    const Generator2DSet gens = build_2d_generators(rep1, rep2);
    const DeformedSet ds(gens, parse_deformation(cfg.g_text));

    std::vector<IdentityReport> all;
    auto append = [&all](std::vector<IdentityReport> more) {
        for (auto& r : more) {
            all.push_back(std::move(r));
        }
    };
    auto tag_axis = [](std::vector<IdentityReport> reports, const std::string& axis) {
        for (auto& r : reports) {
            r.name += " [axis " + axis + "]";
        }
        return reports;
    };
    append(tag_axis(algebra_audit(rep1, cfg.tol), "1"));
    append(tag_axis(algebra_audit(rep2, cfg.tol), "2"));
    append(tensor2d_algebra_audit(gens, cfg.tol));
    append(h_ladder_commutator_audit(gens, cfg.scale, cfg.tol));
    append(deformed_commutator_audit(ds, cfg.tol));
    append(deformed_casimir_audit(ds, cfg.tol));
    append(deformed_hamiltonian_audit(ds, cfg.scale, cfg.tol));
    append(nc_coordinate_audit(cfg.theta, cfg.params.alpha, cfg.params.nu(), cfg.tol));
    append(yp_commutator_check(rep1, cfg.params, cfg.tol));
    return all;
}

inline int run_audit(const RunConfig& cfg) {
    const std::vector<IdentityReport> reports = collect_audit(cfg);
    std::size_t proven_pass = 0;
    std::size_t proven_fail = 0;
    std::size_t flagged = 0;
    for (const auto& r : reports) {
        if (r.assertion_class == AssertionClass::Proven) {
            (r.passed() ? proven_pass : proven_fail) += 1;
        } else if (!r.passed()) {
            ++flagged;
        }
    }

    std::string content;
    if (cfg.format == "csv") {
        Table t{{"name", "paper_ref", "assertion_class", "residual", "verdict"}, {}, {}};
        for (const auto& r : reports) {
            t.rows.push_back({"\"" + r.name + "\"", "\"" + r.paper_ref + "\"", std::string(to_string(r.assertion_class)),
                              fmt17(r.residual_norm), std::string(to_string(r.verdict))});
            t.numeric.push_back({false, false, false, true, false});
        }
        content = render_table(cfg, t);
    } else {
        nlohmann::ordered_json j;
        j["config"] = config_json(cfg);
        nlohmann::ordered_json ids = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            nlohmann::ordered_json e;
            e["name"] = r.name;
            e["paper_ref"] = r.paper_ref;
            e["assertion_class"] = std::string(to_string(r.assertion_class));
            e["residual"] = r.residual_norm;
            e["verdict"] = std::string(to_string(r.verdict));
            ids.push_back(std::move(e));
        }
        j["identities"] = std::move(ids);
        j["summary"] = {{"proven_pass", proven_pass}, {"proven_fail", proven_fail}, {"paper_claimed_flagged", flagged}};
        content = j.dump(2) + "\n";
    }
    write_atomically(cfg.out, content);
    return proven_fail == 0 ? kOk : kProvenFailed;
}

inline int run_wavefn(const RunConfig& cfg) {
    std::vector<double> xs;
    if (cfg.has_x_bounds) {
        if (!(cfg.x_hi > cfg.x_lo) || cfg.samples < 2) {
            throw UsageError("wavefn: need x-hi > x-lo and at least 2 samples");
        }
        xs.resize(cfg.samples);
        const double h = (cfg.x_hi - cfg.x_lo) / static_cast<double>(cfg.samples - 1);
        for (std::size_t i = 0; i < cfg.samples; ++i) {
            xs[i] = cfg.x_lo + h * static_cast<double>(i);
        }
    } else {
        xs = default_grid(cfg.params, cfg.samples);
    }
    const GridFunction f = sample_phi(cfg.n, cfg.sigma, cfg.params, xs);
    Table t{{"x", "value"}, {}, {}};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        t.rows.push_back({fmt17(f.xs[i]), fmt17(f.values[i].real())});
        t.numeric.push_back({true, true});
    }
    write_atomically(cfg.out, render_table(cfg, t));
    return kOk;
}

inline int run_sweep(const RunConfig& cfg) {
    if (cfg.entry.size() != 3 || cfg.entry[0] != 'g' || (cfg.entry[1] != '1' && cfg.entry[1] != '2') ||
        (cfg.entry[2] != '1' && cfg.entry[2] != '2')) {
        throw UsageError("sweep: --entry must be one of g11, g12, g21, g22");
    }
    if (cfg.steps < 1) {
        throw UsageError("sweep: --steps must be at least 1");
    }
    const int row = cfg.entry[1] - '0';
    const int col = cfg.entry[2] - '0';
    const DeformationMatrix base = parse_deformation(cfg.g_text);
    const Generator2DSet gens = make_generators(cfg);

    Table t{{"step", "g_entry", "index", "re", "im"}, {}, {}};
    for (std::size_t s = 0; s < cfg.steps; ++s) {
        const double value =
            cfg.steps == 1 ? cfg.from
                           : cfg.from + (cfg.to - cfg.from) * static_cast<double>(s) / static_cast<double>(cfg.steps - 1);
        const DeformedSet ds(gens, base.with_entry(row, col, value));
        const SpectrumResult sp = spectrum(deformed_hamiltonian(ds, cfg.scale));
        for (std::size_t k = 0; k < sp.eigenvalues.size(); ++k) {
            t.rows.push_back({std::to_string(s), fmt17(value), std::to_string(k), fmt17(sp.eigenvalues[k].real()),
                              fmt17(sp.eigenvalues[k].imag())});
            t.numeric.push_back({true, true, true, true, true});
        }
    }
    write_atomically(cfg.out, render_table(cfg, t));
    return kOk;
}

// Flag table shared by all subcommands: name, default, help.
struct FlagSpec {
    const char* name;
    const char* fallback;
    const char* help;
};

inline const std::vector<FlagSpec>& common_flags() {
    static const std::vector<FlagSpec> flags = {
        {"dims", "8,8", "per-axis basis truncations N1,N2"},
        {"q", "1.5,1.5", "representation parameters q1,q2 (each > 1/2)"},
        {"g", "1,0;0,1", "deformation matrix 'g11,g12;g21,g22', entries re or re+imi"},
        {"mu", "1", "reduced mass"},
        {"hbar", "1", "reduced Planck constant"},
        {"alpha", "1", "Morse range constant"},
        {"v0", "6.125", "Morse well depth (ignored when --nu is given)"},
        {"nu", "", "well parameter nu; overrides --v0"},
        {"scale", "", "Hamiltonian prefactor; default hbar^2 alpha^2 / (2 mu)"},
        {"tol", "1e-10", "relative identity tolerance"},
        {"theta", "0.5", "noncommutativity parameter for the coordinate audit"},
        {"sigma", "3", "wavefunction parameter sigma > 0"},
        {"n", "0", "wavefunction quantum number"},
        {"samples", "4000", "wavefunction grid samples"},
        {"x-lo", "", "wavefunction grid lower bound (default from y range)"},
        {"x-hi", "", "wavefunction grid upper bound (default from y range)"},
        {"entry", "g11", "sweep: entry of g to vary"},
        {"from", "0.5", "sweep: first value"},
        {"to", "1.5", "sweep: last value"},
        {"steps", "21", "sweep: number of values"},
    };
    return flags;
}

inline RunConfig build_config(const std::string& sub, const std::vector<std::pair<std::string, std::string>>& values,
                              const std::string& out, const std::string& format) {
    RunConfig cfg;
    cfg.subcommand = sub;
    cfg.out = out;
    cfg.format = format.empty() ? (sub == "audit" ? "json" : "csv") : format;
    if (cfg.format != "json" && cfg.format != "csv") {
        throw UsageError("--format must be json or csv");
    }
    cfg.raw.entries = values;
    const RawFlags& raw = cfg.raw;

    const auto [d1, d2] = split_pair("dims", raw.get("dims"));
    cfg.dim1 = parse_count("dims", d1);
    cfg.dim2 = parse_count("dims", d2);
    const auto [q1, q2] = split_pair("q", raw.get("q"));
    cfg.q1 = parse_double("q", q1);
    cfg.q2 = parse_double("q", q2);
    Representation{cfg.dim1, cfg.q1}.validate();
    Representation{cfg.dim2, cfg.q2}.validate();
    cfg.g_text = raw.get("g");

    cfg.params.mu = parse_double("mu", raw.get("mu"));
    cfg.params.hbar = parse_double("hbar", raw.get("hbar"));
    cfg.params.alpha = parse_double("alpha", raw.get("alpha"));
    cfg.params.v0 = parse_double("v0", raw.get("v0"));
    if (!raw.get("nu").empty()) {
        cfg.params = MorseParams::from_nu(parse_double("nu", raw.get("nu")), cfg.params.alpha, cfg.params.mu,
                                          cfg.params.hbar);
    }
    cfg.params.validate();
    cfg.scale = raw.get("scale").empty() ? cfg.params.energy_scale() : parse_double("scale", raw.get("scale"));
    cfg.tol = parse_double("tol", raw.get("tol"));
    cfg.theta = parse_double("theta", raw.get("theta"));
    cfg.sigma = parse_double("sigma", raw.get("sigma"));
    if (!(cfg.sigma > 0.0)) {
        throw UsageError("--sigma must be > 0");
    }
    cfg.n = parse_count("n", raw.get("n"));
    cfg.samples = parse_count("samples", raw.get("samples"));
    const bool lo = !raw.get("x-lo").empty();
    const bool hi = !raw.get("x-hi").empty();
    if (lo != hi) {
        throw UsageError("--x-lo and --x-hi must be given together");
    }
    if (lo) {
        cfg.has_x_bounds = true;
        cfg.x_lo = parse_double("x-lo", raw.get("x-lo"));
        cfg.x_hi = parse_double("x-hi", raw.get("x-hi"));
    }
    cfg.entry = raw.get("entry");
    cfg.from = parse_double("from", raw.get("from"));
    cfg.to = parse_double("to", raw.get("to"));
    cfg.steps = parse_count("steps", raw.get("steps"));
    return cfg;
}

} // namespace detail

/// Parses argv, runs one subcommand and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& err = std::cerr) {
    CLI::App app{"Operator-algebra engine and identity auditor for the deformed 2D Morse oscillator", "ncmorse"};
    app.require_subcommand(1);

    struct SubState {
        CLI::App* app = nullptr;
        std::vector<std::string> values;
        std::string out;
        std::string format;
    };
    const auto& flags = detail::common_flags();
    std::vector<SubState> subs;
    subs.reserve(4);
    const std::vector<std::pair<const char*, const char*>> names = {
        {"spectrum", "eigenvalues of the deformed Hamiltonian (CSV index,re,im)"},
        {"audit", "run every identity audit (JSON report)"},
        {"wavefn", "sample a normalized Morse wavefunction (CSV x,value)"},
        {"sweep", "eigenvalue trajectories while one entry of g varies"},
    };
    for (const auto& [name, desc] : names) {
        SubState& s = subs.emplace_back();
        s.app = app.add_subcommand(name, desc);
        s.values.resize(flags.size());
        for (std::size_t i = 0; i < flags.size(); ++i) {
            s.values[i] = flags[i].fallback;
            s.app->add_option(std::string("--") + flags[i].name, s.values[i], flags[i].help);
        }
        s.app->add_option("--out,-o", s.out, "output path (stdout when omitted)");
        s.app->add_option("--format", s.format, "json or csv");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, std::cout, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, err);
        return kUsage;
    }

    for (const SubState& s : subs) {
        if (!s.app->parsed()) {
            continue;
        }
        const std::string sub = s.app->get_name();
        try {
            std::vector<std::pair<std::string, std::string>> values;
            for (std::size_t i = 0; i < flags.size(); ++i) {
                values.emplace_back(flags[i].name, s.values[i]);
            }
            const RunConfig cfg = detail::build_config(sub, values, s.out, s.format);
            if (sub == "spectrum") {
                return detail::run_spectrum(cfg);
            }
            if (sub == "audit") {
                return detail::run_audit(cfg);
            }
            if (sub == "wavefn") {
                return detail::run_wavefn(cfg);
            }
            return detail::run_sweep(cfg);
        } catch (const SingularDeformation& e) {
            err << "ncmorse " << sub << ": " << e.what() << "\n";
            return kSingular;
        } catch (const EigenNonConvergence& e) {
            err << "ncmorse " << sub << ": " << e.what() << "\n";
            return kEigenFailure;
        } catch (const std::invalid_argument& e) {
            err << "ncmorse " << sub << ": " << e.what() << "\n";
            return kUsage;
        } catch (const std::domain_error& e) {
            err << "ncmorse " << sub << ": " << e.what() << "\n";
            return kUsage;
        }
    }
    return kUsage;
}

} // namespace ncmorse::cli
