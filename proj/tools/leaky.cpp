// Command-line front end for the leaky Hurwitz engine.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leaky/chambers.hpp"
#include "leaky/enumerator.hpp"
#include "leaky/json_io.hpp"
#include "leaky/selftest.hpp"

namespace {

enum Exit : int {
    kOk = 0,
    kOther = 1,
    kInvalid = 2,
    kMissingFixture = 3,
    kWeightBound = 4,
    kChamber = 5,
    kUnsupported = 6,
    kSelfTestFailed = 7,
    kFixtureFile = 8,
};

struct RunConfig {
    int g = 0;
    std::optional<int> n;
    std::int64_t k = 0;
    std::vector<std::int64_t> x;
    std::vector<int> e;
    std::vector<int> subset;
    std::string fixtures;
    std::string format = "json";
    int jobs = 1;
    bool drop_zero = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename T>
std::vector<T> parse_list(const std::string& text) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw UsageError("empty entry in list '" + text + "'");
        }
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + item + "'");
        }
        if (used != item.size()) {
            throw UsageError("not an integer: '" + item + "'");
        }
        out.push_back(static_cast<T>(v));
    }
    return out;
}

int marking_count(const RunConfig& cfg) {
    if (cfg.n) {
        return *cfg.n;
    }
    if (!cfg.x.empty()) {
        return static_cast<int>(cfg.x.size());
    }
    if (!cfg.e.empty()) {
        return static_cast<int>(cfg.e.size());
    }
    throw UsageError("give -n, -x or -e");
}

// Problem without a profile, for commands that only need n, k and e.
leaky::Problem shape(const RunConfig& cfg) {
    leaky::Problem p;
    p.g = cfg.g;
    p.k = cfg.k;
    p.n = marking_count(cfg);
    p.e = cfg.e.empty() ? std::vector<int>(static_cast<std::size_t>(p.n), 0) : cfg.e;
    if (static_cast<int>(p.e.size()) != p.n) {
        throw leaky::InvalidProblem(leaky::ProblemDefect::LengthMismatch, "-e must have n entries");
    }
    return p;
}

leaky::Problem problem(const RunConfig& cfg) {
    if (cfg.x.empty()) {
        throw UsageError("-x is required");
    }
    leaky::Problem p = shape(cfg);
    p.x = cfg.x;
    leaky::validate_problem(p);
    return p;
}

leaky::FixtureOracle make_oracle(const RunConfig& cfg) {
    leaky::FixtureTable table = leaky::default_fixtures();
    std::string path = cfg.fixtures;
    if (path.empty()) {
        if (const char* env = std::getenv("LEAKY_FIXTURES")) {
            path = env;
        }
    }
    if (!path.empty()) {
        table.merge_override(leaky::load_fixtures(path));
    }
    return leaky::FixtureOracle(std::move(table));
}

void emit(const RunConfig& cfg, const leaky::Json& j, const std::string& table) {
    if (cfg.format == "table") {
        std::cout << table;
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

std::string vec_str(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

int cmd_number(const RunConfig& cfg) {
    const auto p = problem(cfg);
    const auto oracle = make_oracle(cfg);
    const auto covers = leaky::enumerate_covers(p, oracle, cfg.jobs);
    leaky::Rational h;
    for (const auto& wc : covers) {
        h += wc.multiplicity;
    }
    leaky::Json j{{"H", h.str()}, {"covers", covers.size()}};
    emit(cfg, j, "H\t" + h.str() + "\ncovers\t" + std::to_string(covers.size()) + "\n");
    return kOk;
}

int cmd_covers(const RunConfig& cfg) {
    const auto p = problem(cfg);
    const auto oracle = make_oracle(cfg);
    leaky::Json list = leaky::Json::array();
    std::string table = "aut\tedge_product\tmultiplicity\tcover\n";
    for (const auto& wc : leaky::enumerate_covers(p, oracle, cfg.jobs)) {
        if (cfg.drop_zero && wc.multiplicity.is_zero()) {
            continue;
        }
        auto j = leaky::to_json(wc);
        table += std::to_string(wc.aut) + "\t" + wc.edge_product.str() + "\t" + wc.multiplicity.str() + "\t" +
                 leaky::to_json(wc.cover).dump() + "\n";
        list.push_back(std::move(j));
    }
    emit(cfg, list, table);
    return kOk;
}

int cmd_polynomial(const RunConfig& cfg) {
    const auto p = problem(cfg);
    leaky::Poly total;
    leaky::Json trees = leaky::Json::array();
    for (const auto& tc : leaky::chamber_contributions(p)) {
        total += tc.polynomial;
        leaky::Json weights = leaky::Json::array();
        for (const auto& w : tc.weights) {
            weights.push_back(w.str());
        }
        leaky::Json ends = leaky::Json::array();
        for (const auto& v : tc.type.vertices) {
            ends.push_back(v.ends);
        }
        trees.push_back({{"vertex_ends", ends},
                         {"weights", weights},
                         {"extensions", tc.extensions},
                         {"vertex_factor", tc.vertex_factor.str()}});
    }
    const auto poly = total.restrict_to_degree_hyperplane(p.n, p.k, 0);
    leaky::Json j{{"reference", p.x}, {"polynomial", leaky::to_json(poly)}, {"trees", trees}};
    emit(cfg, j, poly.str() + "\n");
    return kOk;
}

int cmd_walls(const RunConfig& cfg) {
    const auto s = shape(cfg);
    leaky::Json list = leaky::Json::array();
    std::string table;
    for (const auto& w : leaky::walls(s.n, s.k)) {
        list.push_back(leaky::to_json(w, s.k));
        table += leaky::to_json(w, s.k)["subset"].dump() + "\t" + w.form.str(s.k) + "\n";
    }
    emit(cfg, list, table);
    return kOk;
}

int cmd_wallcross(const RunConfig& cfg) {
    if (cfg.subset.empty()) {
        throw UsageError("--subset is required");
    }
    const auto s = shape(cfg);
    leaky::validate_problem([&] {
        // Only the psi bound and stability matter here; borrow any profile of the right degree.
        auto probe = s;
        probe.x.assign(static_cast<std::size_t>(s.n), 0);
        probe.x[0] = s.k * s.euler();
        return probe;
    }());
    const auto wall = leaky::make_wall(s.n, s.k, cfg.subset);
    const auto points = leaky::find_flanking_points(s, wall);
    const auto computed = leaky::wall_crossing(s, wall, points.plus, points.minus);
    const auto formula = leaky::wall_crossing_formula(s, wall);
    leaky::Json j{{"wall", leaky::to_json(wall, s.k)},
                  {"plus", points.plus},
                  {"minus", points.minus},
                  {"computed", computed.factored_str()},
                  {"formula", formula.factored_str()},
                  {"agree", computed == formula},
                  {"computed_terms", leaky::to_json(computed)},
                  {"formula_terms", leaky::to_json(formula)}};
    emit(cfg, j,
         "computed\t" + computed.factored_str() + "\nformula\t" + formula.factored_str() + "\nplus\t" +
             vec_str(points.plus) + "\nminus\t" + vec_str(points.minus) + "\n");
    return kOk;
}

int cmd_classify(const RunConfig& cfg) {
    const auto p = problem(cfg);
    const std::string verdict = leaky::classify(p) == leaky::Vanishing::Zero ? "Zero" : "Positive";
    emit(cfg, leaky::Json{{"classification", verdict}}, verdict + "\n");
    return kOk;
}

int cmd_selftest(const RunConfig& cfg) {
    const auto oracle = make_oracle(cfg);
    const auto results = leaky::run_selftest(oracle, cfg.jobs);
    leaky::Json list = leaky::Json::array();
    std::string table;
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.passed;
        list.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        table += std::string(r.passed ? "PASS" : "FAIL") + "\t" + r.name + (r.detail.empty() ? "" : "\t" + r.detail) + "\n";
    }
    emit(cfg, list, table);
    return ok ? kOk : kSelfTestFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact k-leaky double Hurwitz descendant numbers"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string xs;
    std::string es;
    std::string subset;

    auto add_common = [&](CLI::App* sub, bool needs_x) {
        sub->add_option("-g,--genus", cfg.g, "genus")->capture_default_str();
        sub->add_option("-n", cfg.n, "number of markings (default: length of -x)");
        sub->add_option("-k,--leak", cfg.k, "leak k")->capture_default_str();
        auto* xo = sub->add_option("-x", xs, "profile, comma separated");
        if (needs_x) {
            xo->required();
        }
        sub->add_option("-e", es, "psi exponents, comma separated (default zeros)");
        sub->add_option("--fixtures", cfg.fixtures, "extra vertex multiplicity fixtures (JSON)");
        sub->add_option("--format", cfg.format, "json or table")
            ->check(CLI::IsMember({"json", "table"}))
            ->capture_default_str();
        sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)")->capture_default_str();
    };

    auto* number = app.add_subcommand("number", "print H and the number of covers");
    add_common(number, true);
    auto* covers = app.add_subcommand("covers", "list every cover with its multiplicity");
    add_common(covers, true);
    covers->add_flag("--drop-zero", cfg.drop_zero, "omit covers of multiplicity zero");
    auto* polynomial = app.add_subcommand("polynomial", "genus-0 chamber polynomial at -x");
    add_common(polynomial, true);
    auto* wall_list = app.add_subcommand("walls", "list the walls for n markings");
    add_common(wall_list, false);
    auto* wallcross = app.add_subcommand("wallcross", "wall-crossing difference, computed and closed form");
    add_common(wallcross, false);
    wallcross->add_option("--subset", subset, "wall subset I, comma separated")->required();
    auto* classify = app.add_subcommand("classify", "genus-0 vanishing criterion");
    add_common(classify, true);
    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant suite");
    add_common(selftest, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kInvalid;
    }

    try {
        cfg.x = xs.empty() ? std::vector<std::int64_t>{} : parse_list<std::int64_t>(xs);
        cfg.e = es.empty() ? std::vector<int>{} : parse_list<int>(es);
        cfg.subset = subset.empty() ? std::vector<int>{} : parse_list<int>(subset);
        if (cfg.n && !cfg.x.empty() && *cfg.n != static_cast<int>(cfg.x.size())) {
            throw leaky::InvalidProblem(leaky::ProblemDefect::LengthMismatch, "-n disagrees with the length of -x");
        }
        if (number->parsed()) return cmd_number(cfg);
        if (covers->parsed()) return cmd_covers(cfg);
        if (polynomial->parsed()) return cmd_polynomial(cfg);
        if (wall_list->parsed()) return cmd_walls(cfg);
        if (wallcross->parsed()) return cmd_wallcross(cfg);
        if (classify->parsed()) return cmd_classify(cfg);
        if (selftest->parsed()) return cmd_selftest(cfg);
    } catch (const leaky::MissingVertexData& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kMissingFixture;
    } catch (const leaky::WeightBoundExceeded& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kWeightBound;
    } catch (const leaky::ChamberError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kChamber;
    } catch (const leaky::Unsupported& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kUnsupported;
    } catch (const leaky::FixtureError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kFixtureFile;
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kInvalid;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kOther;
    }
    return kOther;
}
