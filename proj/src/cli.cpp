#include "qsym/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsym/classical.hpp"
#include "qsym/errors.hpp"
#include "qsym/repn.hpp"

namespace qsym::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string cartan, config, pi_theta, diagram;
    bool json = false;
    int max_degree = 0;
    long long budget = 50'000'000;
};

struct Args {
    std::vector<std::string> exprs;
    std::vector<int> ij;
    std::string lambda, mu, weight, pi_prime, tuple, side = "y";
    int index = 0, j = 0;
    bool invariants = false;
    long long max_dim = 4096;
};

struct Report {
    json inputs = json::object();
    json result;
    json certificates = json::array();
    std::vector<std::string> text;
    bool failed = false;

    void line(const std::string& s) { text.push_back(s); }
    void certify(const std::string& name, bool ok, const json& detail = nullptr) {
        json c{{"name", name}, {"ok", ok}};
        if (!detail.is_null()) c["detail"] = detail;
        certificates.push_back(c);
        if (!ok) failed = true;
    }
};

std::string ints_str(const std::vector<int>& v, int shift = 1) {
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k] + shift);
    return s;
}

json ints_json(const std::vector<int>& v, int shift = 1) {
    json a = json::array();
    for (int x : v) a.push_back(x + shift);
    return a;
}

std::string tagged(char tag, const Vec& v) { return std::string(1, tag) + ":" + ints_str(v, 0); }

// "1,2" (1-based) -> {0,1}
std::vector<int> parse_indices(const std::string& text, int n) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(' '));
        tok.erase(tok.find_last_not_of(' ') + 1);
        if (tok.empty()) continue;
        int v = 0;
        try {
            size_t used = 0;
            v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw ValidationError("cannot parse index '" + tok + "'");
        }
        if (v < 1 || v > n) throw ValidationError("index " + tok + " out of range 1.." + std::to_string(n));
        out.push_back(v - 1);
    }
    return out;
}

std::pair<char, Vec> parse_weight(const std::string& text, int n) {
    if (text.size() < 2 || text[1] != ':' || (text[0] != 'r' && text[0] != 'w'))
        throw ValidationError("weight '" + text + "' needs a basis tag r: or w:");
    Vec v;
    std::stringstream ss(text.substr(2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stoi(tok, &used));
            if (tok.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw ValidationError("cannot parse weight coordinate '" + tok + "'");
        }
    }
    if (static_cast<int>(v.size()) != n)
        throw ValidationError("weight '" + text + "' needs " + std::to_string(n) + " coordinates");
    return {text[0], v};
}

Vec fundamental_weight(const std::string& text, const RootDatum& rd) {
    auto [tag, v] = parse_weight(text, rd.n);
    return tag == 'w' ? v : rd.root_to_weight(v);
}

Vec root_weight(const std::string& text, const RootDatum& rd) {
    auto [tag, v] = parse_weight(text, rd.n);
    if (tag == 'r') return v;
    Vec r(rd.n);
    auto q = rd.weight_to_root(v);
    for (int k = 0; k < rd.n; ++k) {
        if (q[k].get_den() != 1) throw ValidationError("weight '" + text + "' is not in the root lattice");
        r[k] = static_cast<int>(q[k].get_num().get_si());
    }
    return r;
}

std::string cartan_label(const json& c) {
    if (c.is_string()) return c.get<std::string>();
    if (c.is_object()) {
        if (!c.contains("series") || !c.contains("rank"))
            throw ValidationError("cartan object needs \"series\" and \"rank\"");
        return c.at("series").get<std::string>() + std::to_string(c.at("rank").get<int>());
    }
    if (c.is_array() && !c.empty()) {
        std::string s;
        for (size_t k = 0; k < c.size(); ++k) s += (k ? "x" : "") + cartan_label(c[k]);
        return s;
    }
    throw ValidationError("unrecognized cartan entry");
}

class Context {
public:
    explicit Context(const Options& o) : opt_(o) {
        if (!o.cartan.empty() && !o.config.empty()) throw ValidationError("give either --cartan or --config, not both");
        if (o.cartan.empty() && o.config.empty()) throw ValidationError("no Cartan data: use --cartan or --config");
        if (!o.config.empty()) {
            std::ifstream in(o.config);
            if (!in) throw ValidationError("cannot open config file '" + o.config + "'");
            try {
                desc_ = json::parse(in);
            } catch (const json::parse_error& e) {
                throw ValidationError(std::string("config is not valid JSON: ") + e.what());
            }
            if (!desc_.is_object() || !desc_.contains("cartan")) throw ValidationError("config needs a \"cartan\" entry");
        } else {
            desc_ = json{{"cartan", o.cartan}};
            if (!o.pi_theta.empty()) desc_["pi_theta"] = o.pi_theta;
            if (!o.diagram.empty()) desc_["d"] = o.diagram;
        }
        rd_ = cartan_init(cartan_label(desc_.at("cartan")));
    }

    const RootDatum& rd() const { return *rd_; }
    const json& descriptor() const { return desc_; }

    std::shared_ptr<const Algebra> algebra() {
        if (!alg_) alg_ = std::make_shared<const Algebra>(*rd_, opt_.max_degree, opt_.budget);
        return alg_;
    }

    const PairPresentation& pair() {
        if (pair_) return *pair_;
        const RootDatum& rd = *rd_;
        std::vector<int> pt;
        if (desc_.contains("pi_theta")) {
            const json& p = desc_["pi_theta"];
            if (p.is_string()) {
                pt = parse_indices(p.get<std::string>(), rd.n);
            } else {
                for (const auto& v : p) {
                    int k = v.get<int>();
                    if (k < 1 || k > rd.n) throw ValidationError("pi_theta index out of range");
                    pt.push_back(k - 1);
                }
            }
        }
        std::vector<int> d(rd.n);
        for (int k = 0; k < rd.n; ++k) d[k] = k;
        if (desc_.contains("d")) {
            const json& dj = desc_["d"];
            std::string ds = dj.is_string() ? dj.get<std::string>() : "";
            if (ds == "flip") {
                d = diagram_flip(rd);
            } else if (ds != "id" && ds != "") {
                d = parse_indices(ds, rd.n);
            } else if (dj.is_array()) {
                d.clear();
                for (const auto& v : dj) d.push_back(v.get<int>() - 1);
            }
            if (static_cast<int>(d.size()) != rd.n) throw ValidationError("diagram permutation has the wrong length");
        }
        PairParams params;
        const json& pj = desc_.contains("params") ? desc_["params"] : desc_;
        for (const char* key : {"c", "s"}) {
            if (!pj.contains(key)) continue;
            for (const auto& [k, v] : pj[key].items()) {
                int idx = parse_indices(k, rd.n).at(0);
                QRat val = parse_qrat(v.get<std::string>());
                (std::string(key) == "c" ? params.c : params.s)[idx] = val;
            }
        }
        pair_ = build_pair(validate_satake(rd, pt, d), algebra(), params);
        return *pair_;
    }

private:
    Options opt_;
    json desc_;
    std::optional<RootDatum> rd_;
    std::shared_ptr<const Algebra> alg_;
    std::optional<PairPresentation> pair_;
};

using Handler = std::function<void(Context&, const Args&, Report&)>;

void unary(Context& cx, const Args& a, Report& r, const std::function<std::string(const Algebra&, const Element&)>& f) {
    auto alg = cx.algebra();
    Element e = alg->parse(a.exprs.at(0));
    r.inputs["expr"] = a.exprs.at(0);
    std::string s = f(*alg, e);
    r.result = s;
    r.line(s);
}

json mat_json(const Mat& m) {
    json a = json::array();
    for (const auto& row : m) a.push_back(row);
    return a;
}

void build_pair_cmd(Context& cx, const Args&, Report& r) {
    const PairPresentation& pr = cx.pair();
    const ThetaData& th = pr.th;
    const Algebra& alg = pr.a();
    json res;
    res["theta"] = mat_json(th.theta.m);
    res["pi_theta"] = ints_json(th.pi_theta);
    res["p"] = ints_json(th.p);
    res["pi_star"] = ints_json(th.pi_star);
    r.line("pi_theta: {" + ints_str(th.pi_theta) + "}");
    r.line("p: " + ints_str(th.p));
    r.line("pi_star: {" + ints_str(th.pi_star) + "}");
    json seqs = json::object();
    for (int i : th.pi_star) {
        seqs[std::to_string(i + 1)] = {{"sequence", sequence_str(th.seq[i])}, {"m", th.m[i]}};
        r.line("sequence " + std::to_string(i + 1) + ": " + sequence_str(th.seq[i]) + ", m = " + std::to_string(th.m[i]));
    }
    res["sequences"] = seqs;
    json gens = json::object();
    for (int i = 0; i < th.rd.n; ++i) {
        if (th.in_theta[i]) continue;
        gens["B" + std::to_string(i + 1)] = alg.str(pr.B[i]);
        r.line("B" + std::to_string(i + 1) + " = " + alg.str(pr.B[i]));
    }
    res["generators"] = gens;
    json tt = json::array();
    for (const Vec& v : pr.t_theta) tt.push_back(tagged('r', v));
    res["t_theta"] = tt;
    res["S"] = ints_json(pr.S);
    r.line("S: {" + ints_str(pr.S) + "}");
    for (int i = 0; i < th.rd.n; ++i) {
        if (th.in_theta[i]) continue;
        auto c = coideal_certificate(pr, i);
        r.certify("coideal B" + std::to_string(i + 1), c.ok, c.violations);
    }
    json rels = json::array();
    for (int i = 0; i < th.rd.n; ++i)
        for (int j = 0; j < th.rd.n; ++j) {
            if (i == j) continue;
            std::string name = "relation (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            try {
                Relation rel = serre_defect(pr, i, j);
                rels.push_back({{"i", i + 1}, {"j", j + 1}, {"formal", rel.formal}, {"defect", rel.defect_str(pr)}});
                r.line(rel.formal + " = " + rel.defect_str(pr));
                r.certify(name, true);
            } catch (const InternalError& e) {
                r.certify(name, false, e.what());
                r.line(name + ": " + e.what());
            }
        }
    res["relations"] = rels;
    auto cf = commutation_failures(pr);
    r.certify("commutation", cf.empty(), cf);
    r.result = res;
}

void coideal_cmd(Context& cx, const Args&, Report& r) {
    const PairPresentation& pr = cx.pair();
    bool all = true;
    for (int i = 0; i < pr.th.rd.n; ++i) {
        if (pr.th.in_theta[i]) continue;
        auto c = coideal_certificate(pr, i);
        json parts = json::array();
        for (const auto& [w, e] : c.parts) parts.push_back({{"right", pr.a().word_str(w)}, {"left", pr.a().str(e)}});
        r.certify("coideal B" + std::to_string(i + 1), c.ok, {{"parts", parts}, {"violations", c.violations}});
        r.line("B" + std::to_string(i + 1) + ": " + (c.ok ? "ok" : "FAILED"));
        for (const auto& v : c.violations) r.line("  " + v);
        all = all && c.ok;
    }
    r.result = all;
}

void serre_cmd(Context& cx, const Args& a, Report& r) {
    const PairPresentation& pr = cx.pair();
    auto ij = parse_indices(std::to_string(a.ij.at(0)) + "," + std::to_string(a.ij.at(1)), pr.th.rd.n);
    r.inputs["i"] = a.ij[0];
    r.inputs["j"] = a.ij[1];
    Relation rel = serre_defect(pr, ij[0], ij[1]);
    std::string d = rel.defect_str(pr);
    r.result = {{"formal", rel.formal}, {"lhs", pr.a().str(rel.lhs)}, {"defect", d}, {"degenerate", rel.degenerate}};
    r.line("relation: " + rel.formal);
    r.line("defect: " + d);
}

void lemma73_cmd(Context& cx, const Args& a, Report& r) {
    const PairPresentation& pr = cx.pair();
    auto ij = parse_indices(std::to_string(a.ij.at(0)) + "," + std::to_string(a.ij.at(1)), pr.th.rd.n);
    r.inputs["i"] = a.ij[0];
    r.inputs["j"] = a.ij[1];
    auto rep = lemma73_check(pr, ij[0], ij[1]);
    r.result = {{"ok", rep.ok},
                {"lambda", tagged('r', rep.lambda)},
                {"projected", pr.a().str(rep.projected)},
                {"zero_zero", pr.a().str(rep.zero_zero)}};
    r.certify("lemma73", rep.ok, rep.violations);
    r.line("lambda: " + tagged('r', rep.lambda));
    r.line("projected: " + pr.a().str(rep.projected));
    r.line("pi_00: " + pr.a().str(rep.zero_zero));
    r.line(rep.ok ? "ok" : "FAILED");
    for (const auto& v : rep.violations) r.line("  " + v);
}

void specialize_cmd(Context& cx, const Args&, Report& r) {
    const PairPresentation& pr = cx.pair();
    auto rep = specialize_pair(pr);
    json items = json::array();
    for (const auto& it : rep.items) {
        bool ok = it.poles_ok && it.in_g && it.fixed && it.tip_ok;
        items.push_back({{"name", it.name}, {"image", it.image}, {"fixed", it.fixed}, {"tip_ok", it.tip_ok}});
        r.certify("specialize " + it.name, ok);
        r.line(it.name + " -> " + it.image + (it.fixed ? "  fixed" : "  NOT fixed") + (it.tip_ok ? "" : "  bad tip"));
    }
    r.certify("theta automorphism", rep.theta_automorphism);
    r.certify("theta involution", rep.theta_involution);
    r.line(std::string("theta automorphism: ") + (rep.theta_automorphism ? "true" : "false"));
    r.line(std::string("theta involution: ") + (rep.theta_involution ? "true" : "false"));
    r.result = {{"ok", rep.ok}, {"items", items}};
}

void spherical_cmd(Context& cx, const Args& a, Report& r) {
    const PairPresentation& pr = cx.pair();
    Vec lam = fundamental_weight(a.weight, pr.th.rd);
    r.inputs["weight"] = a.weight;
    bool sph = spherical_weight_test(lam, pr.th.rd, pr.th.theta);
    r.result = sph;
    r.line(sph ? "true" : "false");
    if (pr.th.rd.weyl_dimension(lam) <= mpz_class(std::to_string(a.max_dim))) {
        SimpleModule m(pr.alg, lam, a.max_dim);
        int dim = invariants(m, pr).dimension;
        r.certify("invariant dimension", dim == (sph ? 1 : 0), {{"dimension", dim}});
    }
}

void simple_cmd(Context& cx, const Args& a, Report& r) {
    const RootDatum& rd = cx.rd();
    Vec lam = fundamental_weight(a.weight, rd);
    r.inputs["weight"] = a.weight;
    SimpleModule m(cx.algebra(), lam, a.max_dim);
    json spaces = json::array();
    r.line("dimension: " + std::to_string(m.dim()));
    for (const auto& ws : m.spaces()) {
        Vec mu = vsub(lam, rd.root_to_weight(ws.nu));
        spaces.push_back({{"weight", tagged('w', mu)}, {"depth", tagged('r', ws.nu)}, {"multiplicity", ws.pivots.size()}});
        r.line("  " + tagged('w', mu) + "  multiplicity " + std::to_string(ws.pivots.size()));
    }
    json res{{"dimension", m.dim()}, {"weight_spaces", spaces}};
    if (a.invariants) {
        const PairPresentation& pr = cx.pair();
        auto inv = invariants(m, pr);
        json basis = json::array();
        for (const auto& v : inv.basis) {
            json coords = json::array();
            for (const auto& c : v) coords.push_back(c.str());
            basis.push_back(coords);
        }
        res["invariants"] = {{"dimension", inv.dimension}, {"basis", basis}};
        r.line("invariants: " + std::to_string(inv.dimension));
        for (const auto& v : inv.basis) {
            std::string s;
            for (int k = 0; k < m.dim(); ++k)
                if (!v[k].is_zero()) s += (s.empty() ? "" : " + ") + ("(" + v[k].str() + ") " + m.basis_label(k));
            r.line("  " + s);
        }
        r.certify("invariant dimension at most one", inv.dimension <= 1, {{"dimension", inv.dimension}});
    }
    r.result = res;
}

void shapovalov_cmd(Context& cx, const Args& a, Report& r) {
    const RootDatum& rd = cx.rd();
    Vec lam = fundamental_weight(a.weight, rd);
    r.inputs["weight"] = a.weight;
    SimpleModule m(cx.algebra(), lam, a.max_dim);
    auto rep = shapovalov_positivity(m);
    json norms = json::array();
    for (const auto& [nu, ns] : rep.norms) {
        json v = json::array();
        std::string s;
        for (const auto& c : ns) {
            v.push_back(c.str());
            s += (s.empty() ? "" : ", ") + c.str();
        }
        Vec mu = vsub(lam, rd.root_to_weight(nu));
        norms.push_back({{"weight", tagged('w', mu)}, {"norms", v}});
        r.line(tagged('w', mu) + ": " + s);
    }
    r.certify("positivity", rep.ok, rep.failures);
    r.line(std::string("positive: ") + (rep.ok ? "true" : "false"));
    r.result = {{"positive", rep.ok}, {"norms", norms}};
}

void restricted_cmd(Context& cx, const Args&, Report& r) {
    const PairPresentation& pr = cx.pair();
    auto rs = restricted_roots(pr.th.rd, pr.th.theta);
    json comps = json::array();
    for (const auto& c : rs.components) comps.push_back({{"type", c.type}, {"rank", c.rank}});
    json pairs = json::array();
    std::string ps;
    for (const auto& [a, b] : rs.variation1_pairs) {
        pairs.push_back({a + 1, b + 1});
        ps += (ps.empty() ? "" : " ") + ("{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}");
    }
    r.result = {{"type", rs.type_label()}, {"components", comps}, {"variation1_pairs", pairs}};
    r.line("type: " + rs.type_label());
    r.line("variation-1 pairs: " + (ps.empty() ? std::string("none") : ps));
}

void flocal_cmd(Context& cx, const Args& a, Report& r) {
    Vec lam = root_weight(a.lambda, cx.rd());
    r.inputs["lambda"] = a.lambda;
    bool f = flocal_torus_test(lam, cx.rd());
    r.result = f;
    r.line(f ? "true" : "false");
}

void sequence_cmd(Context& cx, const Args& a, Report& r) {
    const PairPresentation& pr = cx.pair();
    int i = parse_indices(std::to_string(a.index), pr.th.rd.n).at(0);
    r.inputs["i"] = a.index;
    if (pr.th.in_theta[i]) throw ArgumentError("index " + std::to_string(a.index) + " lies in pi_Theta");
    auto seq = sequence_for(pr.th, i);
    int root = pr.th.in_star(i) ? i : pr.th.p[i];
    Element tt = theta_tilde_y(pr.th, pr.a(), i);
    r.result = {{"sequence", sequence_str(seq)}, {"m", pr.th.m[root]}, {"theta_tilde_y", pr.a().str(tt)}};
    r.line("sequence: " + sequence_str(seq));
    r.line("m: " + std::to_string(pr.th.m[root]));
    r.line("theta~(y" + std::to_string(a.index) + ") = " + pr.a().str(tt));
}

void parabolic_cmd(Context& cx, const Args& a, Report& r) {
    auto alg = cx.algebra();
    int n = cx.rd().n;
    auto pp = parse_indices(a.pi_prime, n);
    auto I = parse_indices(a.tuple, n);
    int j = parse_indices(std::to_string(a.j), n).at(0);
    if (a.side != "x" && a.side != "y") throw ValidationError("--side must be x or y");
    Side side = a.side == "x" ? Side::x : Side::y;
    r.inputs = {{"pi_prime", a.pi_prime}, {"tuple", a.tuple}, {"j", a.j}, {"side", a.side}};
    Element g = parabolic_generator(*alg, pp, I, j, side);
    auto fails = parabolic_shape_failures(*alg, pp, I, j, side);
    std::string name = std::string(side == Side::y ? "Y" : "X") + "_{(" + a.tuple + ")," + std::to_string(a.j) + "}";
    r.result = {{"name", name}, {"generator", alg->str(g)}};
    r.certify("coproduct shape", fails.empty(), fails);
    r.line(name + " = " + alg->str(g));
    r.line(std::string("coproduct shape: ") + (fails.empty() ? "ok" : "FAILED"));
    for (const auto& f : fails) r.line("  " + f);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with quantized enveloping algebras and quantum symmetric pairs", "qsym"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    Args a;
    app.add_option("--cartan", opt.cartan, "Cartan label such as A2, B2, A1xA1");
    app.add_option("--config", opt.config, "pair descriptor file (JSON)");
    app.add_option("--pi-theta", opt.pi_theta, "with --cartan: comma-separated pi_Theta indices");
    app.add_option("--diagram", opt.diagram, "with --cartan: id, flip or a permutation such as 2,1");
    app.add_flag("--json", opt.json, "JSON output");
    app.add_option("--max-degree", opt.max_degree, "degree bound for the rewriting system");
    app.add_option("--budget", opt.budget, "rewriting step budget");

    std::map<std::string, Handler> handlers;
    auto expr_cmd = [&](const std::string& name, const std::string& help,
                        std::function<std::string(const Algebra&, const Element&)> f) {
        auto* sc = app.add_subcommand(name, help);
        sc->add_option("expr", a.exprs, "expression")->required()->expected(1);
        handlers[name] = [f](Context& cx, const Args& ar, Report& r) { unary(cx, ar, r, f); };
    };
    expr_cmd("nf", "normal form", [](const Algebra& g, const Element& e) { return g.str(e); });
    expr_cmd("coprod", "coproduct", [](const Algebra& g, const Element& e) { return g.str(g.coproduct(e)); });
    expr_cmd("antipode", "antipode", [](const Algebra& g, const Element& e) { return g.str(g.antipode(e)); });
    expr_cmd("counit", "counit", [](const Algebra& g, const Element& e) { return g.counit(e).str(); });
    expr_cmd("kappa", "conjugate-linear antiautomorphism kappa",
             [](const Algebra& g, const Element& e) { return g.str(g.kappa(e)); });
    expr_cmd("weight", "weight of a homogeneous element", [](const Algebra& g, const Element& e) {
        auto w = g.weight(e);
        return w ? tagged('r', *w) : std::string("inhomogeneous");
    });
    expr_cmd("bideg", "bidegree", [](const Algebra& g, const Element& e) {
        auto [u, v] = g.bideg(e);
        return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
    });
    expr_cmd("tip", "top bidegree part", [](const Algebra& g, const Element& e) { return g.str(g.tip(e)); });

    for (const std::string name : {"ad", "adr"}) {
        auto* sc = app.add_subcommand(name, name == "ad" ? "left adjoint action ad(a) b" : "right adjoint action ad_r(a) b");
        sc->add_option("operands", a.exprs, "two expressions a b")->required()->expected(2);
        handlers[name] = [name](Context& cx, const Args& ar, Report& r) {
            auto alg = cx.algebra();
            Element x = alg->parse(ar.exprs.at(0)), y = alg->parse(ar.exprs.at(1));
            r.inputs = {{"a", ar.exprs[0]}, {"b", ar.exprs[1]}};
            std::string s = alg->str(name == "ad" ? alg->ad(x, y) : alg->adr(x, y));
            r.result = s;
            r.line(s);
        };
    }
    {
        auto* sc = app.add_subcommand("proj", "projection pi_{lambda,mu}");
        sc->add_option("expr", a.exprs)->required()->expected(1);
        sc->add_option("--lambda", a.lambda, "U^- weight, r:...")->required();
        sc->add_option("--mu", a.mu, "G^+ weight, r:...")->required();
        handlers["proj"] = [](Context& cx, const Args& ar, Report& r) {
            auto alg = cx.algebra();
            Element e = alg->parse(ar.exprs.at(0));
            r.inputs = {{"expr", ar.exprs[0]}, {"lambda", ar.lambda}, {"mu", ar.mu}};
            std::string s = alg->str(alg->project(e, root_weight(ar.lambda, cx.rd()), root_weight(ar.mu, cx.rd())));
            r.result = s;
            r.line(s);
        };
    }
    app.add_subcommand("build-pair", "generators, sequences, certificates and relations of the pair");
    handlers["build-pair"] = build_pair_cmd;
    app.add_subcommand("coideal-check", "coideal certificates for every B_i");
    handlers["coideal-check"] = coideal_cmd;
    for (const std::string name : {"serre-defect", "lemma73"}) {
        auto* sc = app.add_subcommand(name, name == "lemma73" ? "support conditions of P_lambda(Y_ij)" : "quantum Serre relation in B");
        sc->add_option("indices", a.ij, "indices i j")->required()->expected(2);
        handlers[name] = name == "lemma73" ? Handler(lemma73_cmd) : Handler(serre_cmd);
    }
    app.add_subcommand("specialize", "q -> 1 images of the generators");
    handlers["specialize"] = specialize_cmd;
    for (const std::string name : {"spherical", "simple", "shapovalov"}) {
        auto* sc = app.add_subcommand(name, name == "spherical" ? "spherical weight criterion"
                                            : name == "simple" ? "finite-dimensional simple module"
                                                               : "Shapovalov norms and positivity");
        sc->add_option("--weight", a.weight, "highest weight, w:... or r:...")->required();
        sc->add_option("--max-dim", a.max_dim, "module dimension budget");
        if (name == "simple") sc->add_flag("--invariants", a.invariants, "compute B-invariants");
    }
    handlers["spherical"] = spherical_cmd;
    handlers["simple"] = simple_cmd;
    handlers["shapovalov"] = shapovalov_cmd;
    app.add_subcommand("restricted-roots", "restricted root system");
    handlers["restricted-roots"] = restricted_cmd;
    app.add_subcommand("flocal", "is tau(lambda) locally finite")
        ->add_option("--lambda", a.lambda, "weight, r:... or w:...")
        ->required();
    handlers["flocal"] = flocal_cmd;
    app.add_subcommand("sequence", "raising sequence for theta~(y_i)")->add_option("i", a.index)->required();
    handlers["sequence"] = sequence_cmd;
    {
        auto* sc = app.add_subcommand("parabolic", "parabolic coideal generator Y_{I,j} or X_{I,j}");
        sc->add_option("--pi-prime", a.pi_prime, "indices of pi'")->required();
        sc->add_option("--tuple", a.tuple, "the tuple I")->required();
        sc->add_option("--j", a.j, "index j")->required();
        sc->add_option("--side", a.side, "y (default) or x");
    }
    handlers["parabolic"] = parabolic_cmd;

    std::vector<const char*> argv{"qsym"};
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }
    std::string sub = app.get_subcommands().front()->get_name();

    Report rep;
    json pair = nullptr;
    try {
        Context cx(opt);
        pair = cx.descriptor();
        handlers.at(sub)(cx, a, rep);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const ArgumentError& e) {
        err << "argument error: " << e.what() << "\n";
        return 1;
    } catch (const PoleError& e) {
        err << "pole: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "invariant violated: " << e.what() << "\n";
        return 3;
    }

    if (opt.json) {
        json doc{{"pair", pair}, {"subcommand", sub}, {"inputs", rep.inputs}, {"result", rep.result},
                 {"certificates", rep.certificates}};
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& l : rep.text) out << l << "\n";
        for (const auto& c : rep.certificates)
            if (!c["ok"].get<bool>()) out << "certificate failed: " << c["name"].get<std::string>() << "\n";
    }
    return rep.failed ? 3 : 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

}  // namespace qsym::cli
