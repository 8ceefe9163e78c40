// Command line front end: lattices, Hibi generators, monomial ideals,
// Alexander duals, TDAG recovery, CI extraction, numerical verification,
// time-series models and golden-file reproduction.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "lci/discrete.hpp"
#include "lci/gaussian.hpp"
#include "lci/hibi.hpp"
#include "lci/info.hpp"
#include "lci/monomial_ideal.hpp"
#include "lci/serialize.hpp"
#include "lci/timeseries.hpp"

using namespace lci;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitContract = 4;

struct Common {
    std::string format = "text";
    std::string out;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::size_t cap = kDefaultLatticeCap;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out, "Write output to a file instead of stdout");
    cmd->add_option("--seed", c.seed, "Seed for sampled models")->capture_default_str();
    cmd->add_option("--tol", c.tol, "Absolute tolerance for numeric checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cap", c.cap, "Safety cap for closure/transversal enumeration")
        ->capture_default_str();
}

void emit(const Common& c, const std::string& content) {
    if (c.out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw FormatError("cannot open output file: " + c.out);
    f << content;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

/// Generator syntax: without semicolons, commas separate compact generators
/// ("123,234,345"); with semicolons, semicolons separate generators and
/// commas separate labels inside each ("11,21,12;21,22").
std::vector<std::vector<std::string>> parse_generator_spec(const std::string& text) {
    std::vector<std::vector<std::string>> gens;
    if (text.empty()) return gens;
    if (text.find(';') != std::string::npos) {
        for (const auto& part : split(text, ';')) {
            if (part.empty()) continue;
            std::vector<std::string> labels;
            for (const auto& l : split(part, ',')) {
                if (!l.empty()) labels.push_back(l);
            }
            if (!labels.empty()) gens.push_back(labels);
        }
        return gens;
    }
    for (const auto& tok : split(text, ',')) {
        if (tok.empty()) continue;
        std::vector<std::string> labels;
        for (char ch : tok) labels.emplace_back(1, ch);
        gens.push_back(labels);
    }
    return gens;
}

struct LatticeInput {
    GroundSet ground;
    std::vector<IndexSet> gens;
    DistributiveLattice lattice;
};

LatticeInput build_lattice_input(const std::string& gens_spec, const std::string& ground_spec,
                                 std::size_t cap) {
    auto gen_labels = parse_generator_spec(gens_spec);
    std::vector<std::string> labels;
    if (!ground_spec.empty()) {
        for (const auto& g : parse_generator_spec(ground_spec)) {
            labels.insert(labels.end(), g.begin(), g.end());
        }
    } else {
        std::set<std::string> seen;
        for (const auto& g : gen_labels) {
            for (const auto& l : g) seen.insert(l);
        }
        labels.assign(seen.begin(), seen.end());
        std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
            return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
        });
    }
    GroundSet ground(labels);
    std::vector<IndexSet> gens;
    for (const auto& g : gen_labels) gens.push_back(set_from_labels(ground, g));
    auto lattice = lattice_from_generators(ground, gens, cap);
    return LatticeInput{std::move(ground), std::move(gens), std::move(lattice)};
}


std::string lattice_to_text(const DistributiveLattice& l) {
    std::ostringstream out;
    const auto& g = l.ground();
    out << "ground:";
    for (const auto& lbl : g.labels()) out << " " << lbl;
    out << "\nelements (" << l.size() << "):";
    for (const auto& e : l.elements()) out << " " << set_to_string(g, e);
    Poset q = join_irreducibles(l);
    std::vector<IndexSet> jis = q.payload;
    std::sort(jis.begin(), jis.end(), canonical_less);
    out << "\njoin-irreducibles (" << q.size() << "):";
    for (const auto& p : jis) out << " " << set_to_string(g, p);
    out << "\nhasse covers (" << l.covers().size() << "):";
    for (auto [lo, hi] : l.covers()) {
        out << " " << set_to_string(g, l.element(lo)) << "<" << set_to_string(g, l.element(hi));
    }
    out << "\n";
    return out.str();
}

std::string tdag_to_text(const Tdag& t) {
    std::ostringstream out;
    out << "vertices (" << t.size() << "):";
    for (const auto& lbl : t.vertices().labels()) out << " " << lbl;
    out << "\nedges (" << t.edge_count() << "):";
    for (auto [i, j] : t.edges()) {
        out << " " << t.vertices().label(i) << "->" << t.vertices().label(j);
    }
    out << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// lattice

int cmd_lattice(const Common& c, const std::string& gens, const std::string& ground) {
    auto in = build_lattice_input(gens, ground, c.cap);
    if (c.format == "json") {
        json j = lattice_to_json(in.lattice);
        j["join_irreducibles"] = json::array();
        for (const auto& p : join_irreducibles(in.lattice).payload) {
            json arr = json::array();
            for (int v : p.members()) arr.push_back(in.ground.label(v));
            j["join_irreducibles"].push_back(arr);
        }
        emit(c, j.dump(2) + "\n");
    } else if (c.format == "dot") {
        emit(c, lattice_hasse_dot(in.lattice));
    } else {
        emit(c, lattice_to_text(in.lattice));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// hibi

int cmd_hibi(const Common& c, const std::string& gens, const std::string& ground, bool cas) {
    auto in = build_lattice_input(gens, ground, c.cap);
    const auto& l = in.lattice;
    auto bins = hibi_generators(l);
    if (c.format == "json") {
        json j;
        j["binomials"] = json::array();
        for (const auto& b : bins) j["binomials"].push_back(binomial_to_string(in.ground, b));
        j["monomials_u"] = json::object();
        j["monomials_u_prime"] = json::object();
        for (const auto& e : l.elements()) {
            j["monomials_u"][set_to_string(in.ground, e)] =
                monomial_to_string(in.ground, monomial_u(l, e));
            j["monomials_u_prime"][set_to_string(in.ground, e)] =
                monomial_to_string(in.ground, monomial_u_prime(l, e));
        }
        j["generators_g"] = json::object();
        auto q = join_irreducibles(l);
        auto incs = join_irreducible_increments(l);
        for (size_t k = 0; k < q.payload.size(); ++k) {
            j["generators_g"][set_to_string(in.ground, incs[k])] =
                monomial_to_string(in.ground, monomial_u_prime(l, q.payload[k]));
        }
        emit(c, j.dump(2) + "\n");
        return kExitOk;
    }
    if (cas) {
        emit(c, binomials_to_cas_list(in.ground, bins) + "\n");
        return kExitOk;
    }
    std::ostringstream out;
    out << "hibi binomials (" << bins.size() << "):\n";
    for (const auto& b : bins) out << binomial_to_string(in.ground, b) << "\n";
    out << "generators g (keyed by introduced labels):\n";
    auto q = join_irreducibles(l);
    auto incs = join_irreducible_increments(l);
    for (size_t k = 0; k < q.payload.size(); ++k) {
        out << "g_{" << set_to_string(in.ground, incs[k])
            << "} = " << monomial_to_string(in.ground, monomial_u_prime(l, q.payload[k]));
        if (incs[k].count() > 1) out << "  (composite increment)";
        out << "\n";
    }
    emit(c, out.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// ideal / dual

MonomialIdeal mq_of_input(const LatticeInput& in) {
    return ideal_M_Q(join_irreducibles(in.lattice));
}

int cmd_ideal(const Common& c, const std::string& gens, const std::string& ground, bool cas) {
    auto in = build_lattice_input(gens, ground, c.cap);
    auto m = mq_of_input(in);
    if (c.format == "json") {
        emit(c, ideal_to_json(m).dump(2) + "\n");
    } else if (cas) {
        emit(c, ideal_to_cas_list(m) + "\n");
    } else {
        emit(c, ideal_to_text(m));
    }
    return kExitOk;
}

int cmd_dual(const Common& c, const std::string& gens, const std::string& ground,
             const std::string& ideal_file, const std::string& algorithm, bool cas) {
    MonomialIdeal m = [&] {
        if (!ideal_file.empty()) {
            std::ifstream f(ideal_file);
            if (!f) throw FormatError("cannot open ideal file: " + ideal_file);
            return ideal_from_json(json::parse(f));
        }
        return mq_of_input(build_lattice_input(gens, ground, c.cap));
    }();

    MonomialIdeal dual;
    if (algorithm == "intersect") {
        dual = alexander_dual_intersect(m);
    } else if (algorithm == "hitting") {
        dual = alexander_dual_hitting(m, c.cap);
    } else {
        dual = alexander_dual_intersect(m);
        auto check = alexander_dual_hitting(m, c.cap);
        if (!(dual == check)) {
            throw ContractViolation("intersection and hitting-set duals disagree");
        }
    }
    if (c.format == "json") {
        emit(c, ideal_to_json(dual).dump(2) + "\n");
    } else if (cas) {
        emit(c, ideal_to_cas_list(dual) + "\n");
    } else {
        emit(c, ideal_to_text(dual));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// tdag

int cmd_tdag(const Common& c, const std::string& gens, const std::string& ground,
             const std::string& dot_file, const std::string& json_file,
             const std::string& dual_file, bool close, bool reverse, bool show_lattice) {
    Tdag t = [&]() -> Tdag {
        if (!dot_file.empty()) {
            std::ifstream f(dot_file);
            if (!f) throw FormatError("cannot open DOT file: " + dot_file);
            std::stringstream buf;
            buf << f.rdbuf();
            return Tdag::from_digraph(digraph_from_dot(buf.str()), close);
        }
        if (!json_file.empty()) {
            std::ifstream f(json_file);
            if (!f) throw FormatError("cannot open JSON file: " + json_file);
            return Tdag::from_digraph(digraph_from_json(json::parse(f)), close);
        }
        if (!dual_file.empty()) {
            std::ifstream f(dual_file);
            if (!f) throw FormatError("cannot open ideal file: " + dual_file);
            return tdag_from_dual(ideal_from_json(json::parse(f)));
        }
        return tdag_of_lattice(build_lattice_input(gens, ground, c.cap).lattice);
    }();
    if (reverse) t = reverse_tdag(t);

    if (show_lattice) {
        auto l = lattice_of_tdag(t, c.cap);
        if (c.format == "json") {
            emit(c, lattice_to_json(l).dump(2) + "\n");
        } else if (c.format == "dot") {
            emit(c, lattice_hasse_dot(l));
        } else {
            emit(c, lattice_to_text(l));
        }
        return kExitOk;
    }
    if (c.format == "json") {
        emit(c, tdag_to_json(t).dump(2) + "\n");
    } else if (c.format == "dot") {
        emit(c, tdag_to_dot(t));
    } else {
        emit(c, tdag_to_text(t));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// ci

int cmd_ci(const Common& c, const std::string& gens, const std::string& ground) {
    auto in = build_lattice_input(gens, ground, c.cap);
    auto stmts = ci_statements(in.lattice);
    if (c.format == "json") {
        json j = json::array();
        for (const auto& s : stmts) j.push_back(s.to_string(in.ground));
        emit(c, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "ci statements (" << stmts.size() << "):\n";
        for (const auto& s : stmts) out << s.to_string(in.ground) << "\n";
        emit(c, out.str());
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// pipeline

int cmd_pipeline(const Common& c, const std::string& gens, const std::string& ground) {
    auto in = build_lattice_input(gens, ground, c.cap);
    const auto& l = in.lattice;
    std::ostringstream out;
    out << lattice_to_text(l);

    auto bins = hibi_generators(l);
    out << "hibi binomials (" << bins.size() << "):\n";
    for (const auto& b : bins) out << binomial_to_string(in.ground, b) << "\n";

    auto mq = mq_of_input(in);
    out << "M_Q (" << mq.gens.size() << " generators):\n" << ideal_to_text(mq);

    auto dual = alexander_dual_intersect(mq);
    auto dual2 = alexander_dual_hitting(mq, c.cap);
    if (!(dual == dual2)) throw ContractViolation("intersection and hitting-set duals disagree");
    out << "M_Q* (" << dual.gens.size() << " generators):\n" << ideal_to_text(dual);

    Tdag expected = tdag_of_lattice(l);
    Tdag recovered = tdag_from_dual(dual);
    out << "recovered tdag:\n" << tdag_to_text(recovered);

    auto stmts = ci_statements(l);
    out << "ci statements (" << stmts.size() << "):\n";
    for (const auto& s : stmts) out << s.to_string(in.ground) << "\n";

    const bool ok = recovered.same_graph(expected);
    out << "round-trip tdag check: " << (ok ? "PASS" : "FAIL") << "\n";
    emit(c, out.str());
    return ok ? kExitOk : kExitContract;
}

// ---------------------------------------------------------------------------
// verify

struct CheckRow {
    std::string name;
    bool pass;
    double max_deviation;
};

json rows_to_json(const std::vector<CheckRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"max_deviation", r.max_deviation}});
    }
    return arr;
}

template <class T>
void discrete_checks(const LatticeInput& in, const BasicJoint<T>& d, double tol,
                     std::vector<CheckRow>& rows) {
    const auto& l = in.lattice;
    const auto& g = in.ground;
    // Hibi margin relations over every lattice pair.
    for (int i = 0; i < l.size(); ++i) {
        for (int j = i + 1; j < l.size(); ++j) {
            auto rep = check_hibi_relation(d, l.element(i), l.element(j), tol);
            rows.push_back({"hibi p_{" + set_to_string(g, l.element(i)) + "} p_{" +
                                set_to_string(g, l.element(j)) + "}",
                            rep.pass, rep.max_deviation});
        }
    }
    // Extracted CI statements.
    for (const auto& s : ci_statements(l)) {
        auto rep = check_ci(d, s, tol);
        rows.push_back({"ci " + s.to_string(g), rep.pass, rep.max_deviation});
    }
    if (!d.positive) {
        rows.push_back({"q checks skipped (joint not strictly positive)", true, 0.0});
    } else {
        // q duality per element (complements within the top element).
        const IndexSet top = l.element(l.top_index());
        const bool full_top = top.is_full();
        if (full_top) {
            for (const auto& e : l.elements()) {
                auto rep = check_q_duality(d, e, tol);
                rows.push_back({"q-duality p_{" + set_to_string(g, e) + "}", rep.pass,
                                rep.max_deviation});
            }
            // q products for statements whose sets cover the ground set.
            for (const auto& s : ci_statements(l)) {
                if (s.a.set_union(s.b).set_union(s.c).is_full()) {
                    auto rep = check_q_product(d, s.a, s.b, tol);
                    rows.push_back({"q-product q_{" + set_to_string(g, s.a) + "} q_{" +
                                        set_to_string(g, s.b) + "}",
                                    rep.pass, rep.max_deviation});
                }
            }
            // Margin/q duality ratio along comparable join irreducibles.
            Poset q = join_irreducibles(l);
            for (int a = 0; a < q.size(); ++a) {
                for (int b = 0; b < q.size(); ++b) {
                    if (a != b && q.less_equal(a, b)) {
                        auto rep = check_duality_ratio(d, q.payload[static_cast<size_t>(a)],
                                                       q.payload[static_cast<size_t>(b)], tol);
                        rows.push_back({"duality-ratio I(" + q.nodes.label(a) + ") <= I(" +
                                            q.nodes.label(b) + ")",
                                        rep.pass, rep.max_deviation});
                    }
                }
            }
        }
    }
}

void info_checks(const LatticeInput& in, const DiscreteJoint& d, double tol,
                 std::vector<CheckRow>& rows) {
    const auto& l = in.lattice;
    Valuation v = shannon_valuation(d, l);
    double dev = 0.0;
    for (int i = 0; i < l.size(); ++i) {
        for (int j = i + 1; j < l.size(); ++j) {
            double lhs = v.at(l.element(l.meet(i, j))) + v.at(l.element(l.join(i, j)));
            double rhs = v.at(l.element(i)) + v.at(l.element(j));
            dev = std::max(dev, std::fabs(lhs - rhs));
        }
    }
    rows.push_back({"valuation identity", dev <= tol, dev});

    if (!in.gens.empty() && running_intersection_check(in.gens)) {
        IndexSet un(in.ground.size());
        for (const auto& s : in.gens) un = un.set_union(s);
        double rota = rota_inclusion_exclusion(v, in.gens);
        double diff = std::fabs(rota - v.at(un));
        rows.push_back({"rota inclusion-exclusion over generators", diff <= tol, diff});
    }
}

void gaussian_checks(const LatticeInput& in, const GaussianModel& m, double tol, double proj_tol,
                     std::vector<CheckRow>& rows) {
    const auto& l = in.lattice;
    const auto& g = in.ground;
    const int n = g.size();

    for (const auto& s : ci_statements(l)) {
        auto rep = check_gaussian_ci(m, s, tol);
        double dev = std::max({rep.schur_deviation, rep.commutator_deviation,
                               rep.partial_deviation});
        rows.push_back({"gaussian-ci " + s.to_string(g), rep.pass, dev});
    }

    double law_dev = 0.0, prod_dev = 0.0, comp_dev = 0.0;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < l.size(); ++i) {
        const Eigen::MatrixXd pi = projector(m, l.element(i));
        law_dev = std::max(law_dev, (pi * pi - pi).cwiseAbs().maxCoeff());
        law_dev = std::max(law_dev, (pi - pi.transpose()).cwiseAbs().maxCoeff());
        comp_dev = std::max(comp_dev, (pi + q_projector(m, l.element(i)) - id).cwiseAbs().maxCoeff());
        for (int j = 0; j < l.size(); ++j) {
            const Eigen::MatrixXd pj = projector(m, l.element(j));
            const Eigen::MatrixXd pm = projector(m, l.element(i).set_intersect(l.element(j)));
            prod_dev = std::max(prod_dev, (pi * pj - pm).cwiseAbs().maxCoeff());
        }
    }
    rows.push_back({"projector idempotence and symmetry", law_dev <= proj_tol, law_dev});
    rows.push_back({"projector products P_I P_J = P_{I n J}", prod_dev <= proj_tol, prod_dev});
    rows.push_back({"complement law P_I + Q = I", comp_dev <= proj_tol, comp_dev});

    // Q-products vanish for statements covering the ground set (the
    // complementary-lattice independences).
    for (const auto& s : ci_statements(l)) {
        if (!s.a.set_union(s.b).set_union(s.c).is_full()) continue;
        const Eigen::MatrixXd qa = q_projector(m, s.b.set_union(s.c));
        const Eigen::MatrixXd qb = q_projector(m, s.a.set_union(s.c));
        const double dev = (qa * qb).cwiseAbs().maxCoeff();
        rows.push_back({"q-complement product Q_{" + set_to_string(g, s.a) + "} Q_{" +
                            set_to_string(g, s.b) + "}",
                        dev <= tol, dev});
    }
}

int cmd_verify(const Common& c, const std::string& gens, const std::string& ground,
               bool sample_tdag, const std::string& joint_file, bool gaussian,
               const std::string& cards_spec, const std::string& model_out, double proj_tol) {
    auto in = build_lattice_input(gens, ground, c.cap);
    std::vector<CheckRow> rows;
    std::string model;
    auto dump_model = [&](const json& j) {
        if (model_out.empty()) return;
        std::ofstream f(model_out, std::ios::binary);
        if (!f) throw FormatError("cannot open model output file: " + model_out);
        f << j.dump(2) << "\n";
    };

    if (gaussian) {
        model = "gaussian";
        auto m = gaussian_from_tdag(tdag_of_lattice(in.lattice), c.seed);
        dump_model(gaussian_to_json(m));
        gaussian_checks(in, m, c.tol, proj_tol, rows);
    } else if (!joint_file.empty()) {
        std::ifstream f(joint_file);
        if (!f) throw FormatError("cannot open joint file: " + joint_file);
        json j = json::parse(f);
        if (joint_json_is_exact(j)) {
            model = "exact";
            auto d = exact_joint_from_json(j);
            if (d.ground != in.ground) throw DomainError("joint ground set does not match --gens");
            discrete_checks(in, d, c.tol, rows);
        } else {
            model = "discrete";
            auto d = joint_from_json(j);
            if (d.ground != in.ground) throw DomainError("joint ground set does not match --gens");
            discrete_checks(in, d, c.tol, rows);
            info_checks(in, d, c.tol, rows);
        }
    } else if (sample_tdag) {
        model = "discrete";
        std::vector<int> cards;
        if (cards_spec.empty()) {
            cards.assign(static_cast<size_t>(in.ground.size()), 2);
        } else {
            for (const auto& t : split(cards_spec, ',')) cards.push_back(std::stoi(t));
            if (cards.size() == 1) cards.assign(static_cast<size_t>(in.ground.size()), cards[0]);
        }
        auto d = joint_from_tdag(tdag_of_lattice(in.lattice), cards, c.seed);
        dump_model(joint_to_json(d));
        discrete_checks(in, d, c.tol, rows);
        info_checks(in, d, c.tol, rows);
    } else {
        throw FormatError("verify needs a model: --sample-tdag, --joint FILE or --gaussian");
    }

    bool all_pass = true;
    double max_dev = 0.0;
    for (const auto& r : rows) {
        all_pass = all_pass && r.pass;
        max_dev = std::max(max_dev, r.max_deviation);
    }
    json report{{"model", model},         {"seed", c.seed},       {"tol", c.tol},
                {"checks", rows_to_json(rows)}, {"pass", all_pass}, {"max_deviation", max_dev}};
    if (c.format == "text") {
        std::ostringstream out;
        for (const auto& r : rows) {
            out << (r.pass ? "PASS " : "FAIL ") << r.name << "  (max dev " << r.max_deviation
                << ")\n";
        }
        out << (all_pass ? "ALL CHECKS PASSED" : "CHECKS FAILED") << " (max deviation " << max_dev
            << ")\n";
        emit(c, out.str());
    } else {
        emit(c, report.dump(2) + "\n");
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// timeseries

std::string timeseries_text(const SeriesSpec& spec, std::size_t cap) {
    auto l = timeseries_lattice(spec, cap);
    Tdag t = timeseries_tdag(spec);
    std::ostringstream out;
    out << "spec: series=" << spec.series << " horizon=" << spec.horizon << " hub=" << spec.hub
        << "\n";
    out << "tdag: " << t.size() << " vertices, " << t.edge_count() << " edges\n";
    out << "lattice elements (" << l.size() << "):\n";
    for (const auto& e : l.elements()) out << set_to_string(l.ground(), e) << "\n";
    out << "join-irreducible tops:\n";
    for (int i = 1; i <= spec.series; ++i) {
        out << "series " << i << ": "
            << set_to_string(t.vertices(), ancestors(t, spec.label(i, spec.horizon))) << "\n";
    }
    return out.str();
}

std::string advance_text(const SeriesSpec& spec) {
    auto steps = advance_time(spec);
    Tdag next = timeseries_tdag({spec.series, spec.horizon + 1, spec.hub});
    const auto& g = next.vertices();
    std::ostringstream out;
    out << "advance: horizon " << spec.horizon << " -> " << spec.horizon + 1 << "\n";
    for (const auto& step : steps) {
        out << "series " << step.series << ":\n";
        out << "  old top: " << set_to_string(g, step.old_top) << "\n";
        out << "  new top: " << set_to_string(g, step.new_top) << "\n";
        out << "  innovation u_" << step.series << ": " << set_to_string(g, step.innovation)
            << "\n";
    }
    // Cumulative log-product reconstruction: log g_{i,t} is the sum of the
    // innovation logs over all steps up to the horizon.
    out << "log-product reconstruction:\n";
    for (int i = 1; i <= spec.series; ++i) {
        out << "  log g_{" << i << "," << spec.horizon + 1 << "} =";
        for (int t = 0; t <= spec.horizon; ++t) {
            if (t == 0) {
                // Horizon-1 top is the first observation itself.
                out << " log z_{" << spec.label(i, 1) << "}";
                continue;
            }
            auto s = advance_time({spec.series, t, spec.hub});
            const auto& step = s[static_cast<size_t>(i - 1)];
            // Innovation sets live over the horizon t+1 ground.
            Tdag gt = timeseries_tdag({spec.series, t + 1, spec.hub});
            for (int v : step.innovation.members()) {
                out << " + log z_{" << gt.vertices().label(v) << "}";
            }
        }
        out << "\n";
    }
    return out.str();
}

int cmd_timeseries(const Common& c, int series, int horizon, int hub, bool advance) {
    SeriesSpec spec{series, horizon, hub};
    spec.validate();
    if (advance) {
        emit(c, advance_text(spec));
        return kExitOk;
    }
    if (c.format == "dot") {
        emit(c, tdag_to_dot(timeseries_tdag(spec)));
    } else if (c.format == "json") {
        auto l = timeseries_lattice(spec, c.cap);
        json j;
        j["tdag"] = tdag_to_json(timeseries_tdag(spec));
        j["lattice"] = lattice_to_json(l);
        emit(c, j.dump(2) + "\n");
    } else {
        emit(c, timeseries_text(spec, c.cap));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// entropy

int cmd_entropy(const Common& c, const std::string& gens, const std::string& ground,
                const std::string& joint_file, double log_base) {
    auto in = build_lattice_input(gens, ground, c.cap);
    DiscreteJoint d = [&] {
        if (!joint_file.empty()) {
            std::ifstream f(joint_file);
            if (!f) throw FormatError("cannot open joint file: " + joint_file);
            return joint_from_json(json::parse(f));
        }
        std::vector<int> cards(static_cast<size_t>(in.ground.size()), 2);
        return joint_from_tdag(tdag_of_lattice(in.lattice), cards, c.seed);
    }();
    if (d.ground != in.ground) throw DomainError("joint ground set does not match --gens");

    // Values are computed in nats; the base only rescales the display.
    if (log_base < 0 || log_base == 1.0) throw DomainError("log base must be 0 (natural) or > 1");
    const double scale = log_base > 0 ? 1.0 / std::log(log_base) : 1.0;
    const char* unit = log_base == 0.0 ? "nats" : (log_base == 2.0 ? "bits" : "scaled");

    Valuation v = shannon_valuation(d, in.lattice);
    EdgeIncrements inc = edge_increments(v, in.lattice);
    if (c.format == "dot") {
        for (double& x : inc.vertex_delta) x *= scale;
        for (auto& [i, j, delta] : inc.edges) delta *= scale;
        emit(c, edge_increments_dot(inc));
        return kExitOk;
    }
    Valuation shown;
    for (const auto& [s, x] : v.values) shown.set(s, x * scale);
    if (c.format == "json") {
        json j;
        j["H"] = valuation_to_json(in.ground, shown);
        j["unit"] = unit;
        j["valuation_identity"] = valuation_check(v, in.lattice, c.tol);
        if (!in.gens.empty() && running_intersection_check(in.gens)) {
            j["rota"] = rota_inclusion_exclusion(v, in.gens) * scale;
        }
        emit(c, j.dump(2) + "\n");
        return kExitOk;
    }
    std::ostringstream out;
    out << "H per lattice element (" << unit << ", information convention):\n";
    for (const auto& e : in.lattice.elements()) {
        out << "  H(" << set_to_string(in.ground, e) << ") = " << shown.at(e) << "\n";
    }
    out << "valuation identity: " << (valuation_check(v, in.lattice, c.tol) ? "PASS" : "FAIL")
        << "\n";
    if (!in.gens.empty() && running_intersection_check(in.gens)) {
        IndexSet un(in.ground.size());
        for (const auto& s : in.gens) un = un.set_union(s);
        out << "rota over generators = " << rota_inclusion_exclusion(v, in.gens) * scale
            << " vs H(union) = " << shown.at(un) << "\n";
    }
    out << "edge increments:\n";
    for (const auto& [i, j, delta] : inc.edges) {
        out << "  " << inc.tdag.vertices().label(i) << " -> " << inc.tdag.vertices().label(j)
            << " : " << delta * scale << "\n";
    }
    emit(c, out.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// repro

std::string repro_content(const std::string& figure, std::size_t cap) {
    if (figure == "fig1") {
        return lattice_to_text(build_lattice_input("123,234,345", "", cap).lattice);
    }
    if (figure == "fig2") {
        return tdag_to_dot(tdag_of_lattice(build_lattice_input("123,234,345", "", cap).lattice));
    }
    if (figure == "fig3") {
        return tdag_to_dot(timeseries_tdag({3, 3, 2}));
    }
    if (figure == "fig4") {
        return advance_text({3, 3, 2});
    }
    if (figure == "ex-dual") {
        auto in = build_lattice_input("123,234,345", "", cap);
        auto dual = alexander_dual_intersect(mq_of_input(in));
        auto check = alexander_dual_hitting(mq_of_input(in), cap);
        if (!(dual == check)) throw ContractViolation("dual algorithms disagree");
        return ideal_to_text(dual);
    }
    if (figure == "ex-timeseries") {
        return timeseries_text({3, 3, 2}, cap);
    }
    throw FormatError("unknown figure: " + figure);
}

int cmd_repro(const Common& c, const std::string& figure, const std::string& paper_dir) {
    static const std::map<std::string, std::string> files{
        {"fig1", "fig1_lattice.txt"},     {"fig2", "fig2_tdag.dot"},
        {"fig3", "fig3_tdag.dot"},        {"fig4", "fig4_advance.txt"},
        {"ex-dual", "ex_dual.txt"},       {"ex-timeseries", "ex_timeseries.txt"}};
    auto it = files.find(figure);
    if (it == files.end()) throw FormatError("unknown figure: " + figure);
    const std::string path = paper_dir + "/" + it->second;
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open golden file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    const std::string golden = buf.str();
    const std::string fresh = repro_content(figure, c.cap);
    if (fresh == golden) {
        std::cout << "repro " << figure << ": MATCH (" << path << ")\n";
        return kExitOk;
    }
    std::cout << "repro " << figure << ": MISMATCH vs " << path << "\n";
    auto glines = split(golden, '\n');
    auto flines = split(fresh, '\n');
    const size_t rows = std::max(glines.size(), flines.size());
    for (size_t k = 0; k < rows; ++k) {
        const std::string* gl = k < glines.size() ? &glines[k] : nullptr;
        const std::string* fl = k < flines.size() ? &flines[k] : nullptr;
        if (gl && fl && *gl == *fl) continue;
        if (gl) std::cout << "-" << *gl << "\n";
        if (fl) std::cout << "+" << *fl << "\n";
    }
    return kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice conditional independence models as executable algebra"};
    app.require_subcommand(1);

    Common common;
    std::string gens, ground, ideal_file, dot_file, json_file, dual_file, joint_file, cards_spec,
        model_out;
    std::string algorithm = "both", figure, paper_dir = "paper";
    bool cas = false, close = false, reverse = false, show_lattice = false;
    bool sample_tdag = false, gaussian = false, advance = false;
    int series = 3, horizon = 3, hub = 2;
    double proj_tol = 1e-10;
    double log_base = 0.0; // 0 = natural log

    std::function<int()> action;

    auto* c_lattice = app.add_subcommand("lattice", "Generate the distributive lattice closure");
    add_common(c_lattice, common);
    c_lattice->add_option("--gens", gens, "Generators, e.g. 123,234,345 or 11,21;21,22");
    c_lattice->add_option("--ground", ground, "Ground set labels (defaults to generator labels)");
    c_lattice->callback([&] { action = [&] { return cmd_lattice(common, gens, ground); }; });

    auto* c_hibi = app.add_subcommand("hibi", "Hibi binomial generators and monomial maps");
    add_common(c_hibi, common);
    c_hibi->add_option("--gens", gens, "Lattice generators");
    c_hibi->add_option("--ground", ground, "Ground set labels");
    c_hibi->add_flag("--cas", cas, "Computer-algebra list output");
    c_hibi->callback([&] { action = [&] { return cmd_hibi(common, gens, ground, cas); }; });

    auto* c_ideal = app.add_subcommand("ideal", "Monomial ideal M_Q of the join-irreducible poset");
    add_common(c_ideal, common);
    c_ideal->add_option("--gens", gens, "Lattice generators");
    c_ideal->add_option("--ground", ground, "Ground set labels");
    c_ideal->add_flag("--cas", cas, "Computer-algebra list output");
    c_ideal->callback([&] { action = [&] { return cmd_ideal(common, gens, ground, cas); }; });

    auto* c_dual = app.add_subcommand("dual", "Alexander dual of M_Q or of a supplied ideal");
    add_common(c_dual, common);
    c_dual->add_option("--gens", gens, "Lattice generators");
    c_dual->add_option("--ground", ground, "Ground set labels");
    c_dual->add_option("--ideal", ideal_file, "Dualize an ideal from a JSON file instead");
    c_dual->add_option("--algorithm", algorithm, "intersect | hitting | both (cross-checked)")
        ->check(CLI::IsMember({"intersect", "hitting", "both"}))
        ->capture_default_str();
    c_dual->add_flag("--cas", cas, "Computer-algebra list output");
    c_dual->callback(
        [&] { action = [&] { return cmd_dual(common, gens, ground, ideal_file, algorithm, cas); }; });

    auto* c_tdag = app.add_subcommand("tdag", "TDAG of a lattice, or import/validate one");
    add_common(c_tdag, common);
    c_tdag->add_option("--gens", gens, "Lattice generators");
    c_tdag->add_option("--ground", ground, "Ground set labels");
    c_tdag->add_option("--dot", dot_file, "Import a TDAG from a DOT file");
    c_tdag->add_option("--json", json_file, "Import a TDAG from a JSON file");
    c_tdag->add_option("--dual", dual_file, "Recover the TDAG from a dual ideal JSON file");
    c_tdag->add_flag("--close", close, "Take the transitive closure of imported edges");
    c_tdag->add_flag("--reverse", reverse, "Reverse all edges");
    c_tdag->add_flag("--lattice", show_lattice, "Print the ancestral-set lattice instead");
    c_tdag->callback([&] {
        action = [&] {
            return cmd_tdag(common, gens, ground, dot_file, json_file, dual_file, close, reverse,
                            show_lattice);
        };
    });

    auto* c_ci = app.add_subcommand("ci", "Conditional independence statements of the lattice");
    add_common(c_ci, common);
    c_ci->add_option("--gens", gens, "Lattice generators");
    c_ci->add_option("--ground", ground, "Ground set labels");
    c_ci->callback([&] { action = [&] { return cmd_ci(common, gens, ground); }; });

    auto* c_pipe = app.add_subcommand(
        "pipeline", "Full chain: lattice, Hibi, M_Q, dual, TDAG recovery, CI; PASS/FAIL");
    add_common(c_pipe, common);
    c_pipe->add_option("--gens", gens, "Lattice generators");
    c_pipe->add_option("--ground", ground, "Ground set labels");
    c_pipe->callback([&] { action = [&] { return cmd_pipeline(common, gens, ground); }; });

    auto* c_verify = app.add_subcommand("verify", "Run all numeric oracles against a model");
    add_common(c_verify, common);
    c_verify->add_option("--gens", gens, "Lattice generators");
    c_verify->add_option("--ground", ground, "Ground set labels");
    c_verify->add_flag("--sample-tdag", sample_tdag, "Sample a factorizing joint from the TDAG");
    c_verify->add_option("--joint", joint_file, "Load a joint table from JSON");
    c_verify->add_flag("--gaussian", gaussian, "Use the Gaussian projector oracle");
    c_verify->add_option("--cards", cards_spec, "Alphabet sizes (single value or comma list)");
    c_verify->add_option("--model-out", model_out, "Write the sampled model as JSON");
    c_verify->add_option("--proj-tol", proj_tol, "Tolerance for projector identities")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_verify->callback([&] {
        action = [&] {
            return cmd_verify(common, gens, ground, sample_tdag, joint_file, gaussian, cards_spec,
                              model_out, proj_tol);
        };
    });

    auto* c_ts = app.add_subcommand("timeseries", "Hub-structured time-series LCI model");
    add_common(c_ts, common);
    c_ts->add_option("--series", series, "Number of series")->capture_default_str();
    c_ts->add_option("--horizon", horizon, "Time horizon")->capture_default_str();
    c_ts->add_option("--hub", hub, "Hub series index")->capture_default_str();
    c_ts->add_flag("--advance", advance, "Print the one-step time advance (innovations)");
    c_ts->callback(
        [&] { action = [&] { return cmd_timeseries(common, series, horizon, hub, advance); }; });

    auto* c_entropy = app.add_subcommand("entropy", "Shannon valuation and additive decomposition");
    add_common(c_entropy, common);
    c_entropy->add_option("--gens", gens, "Lattice generators");
    c_entropy->add_option("--ground", ground, "Ground set labels");
    c_entropy->add_option("--joint", joint_file, "Load a joint table from JSON");
    c_entropy->add_option("--base", log_base, "Display log base (0 = natural, 2 = bits)")
        ->capture_default_str();
    c_entropy->callback(
        [&] { action = [&] { return cmd_entropy(common, gens, ground, joint_file, log_base); }; });

    auto* c_repro = app.add_subcommand("repro", "Regenerate a vendored artifact and diff it");
    add_common(c_repro, common);
    c_repro->add_option("figure", figure, "fig1|fig2|fig3|fig4|ex-dual|ex-timeseries")->required();
    c_repro->add_option("--paper-dir", paper_dir, "Directory with golden files")
        ->capture_default_str();
    c_repro->callback([&] { action = [&] { return cmd_repro(common, figure, paper_dir); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        return action ? action() : kExitParse;
    } catch (const ResourceError& e) {
        std::cerr << "error (cap exceeded): " << e.what() << "\n";
        return kExitCap;
    } catch (const ContractViolation& e) {
        std::cerr << "error (contract violation): " << e.what() << "\n";
        return kExitContract;
    } catch (const FormatError& e) {
        std::cerr << "error (bad input): " << e.what() << "\n";
        return kExitParse;
    } catch (const DomainError& e) {
        std::cerr << "error (bad input): " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const json::exception& e) {
        std::cerr << "error (bad JSON): " << e.what() << "\n";
        return kExitParse;
    }
}
