#include "omf/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "omf/montes.hpp"
#include "omf/polyparse.hpp"
#include "omf/report.hpp"

namespace omf {

namespace {

long long parse_prime(const std::string& s) {
    try {
        size_t used = 0;
        long long p = std::stoll(s, &used);
        require(used == s.size(), errc::not_prime, "bad prime: " + s);
        require_prime(p);
        return p;
    } catch (const std::logic_error&) {
        throw om_error(errc::not_prime, "bad prime: " + s);
    }
}

// "y" polynomials in a type spec are parsed with the x grammar.
IntPoly parse_y_poly(std::string s) {
    for (auto& c : s)
        if (c == 'y') c = 'x';
    return parse_poly(s);
}

// type spec:  phi:lambda:psi ; phi:lambda:psi ; ...
// psi is given with integer coefficients (embedded through the prime field).
OMType parse_type_spec(const std::string& spec, long long p) {
    std::vector<std::array<std::string, 3>> levels;
    std::istringstream ss(spec);
    std::string level;
    while (std::getline(ss, level, ';')) {
        std::istringstream ls(level);
        std::array<std::string, 3> parts;
        for (int i = 0; i < 3; ++i)
            require(static_cast<bool>(std::getline(ls, parts[static_cast<size_t>(i)], ':')),
                    errc::parse_error, "type level must be phi:lambda:psi");
        levels.push_back(parts);
    }
    require(!levels.empty(), errc::parse_error, "empty type spec");

    FieldTower base(p);
    IntPoly phi1 = parse_poly(levels[0][0]);
    TowerPoly psi0 = reduce_mod_p(base, phi1);
    OMType t = OMType::order0(p, psi0);
    t.set_representative(phi1);
    for (size_t li = 0; li < levels.size(); ++li) {
        // slope "-h/e" or "-h"
        const std::string& ls = levels[li][1];
        require(!ls.empty() && ls[0] == '-', errc::parse_error, "slope must be negative: " + ls);
        long long h = 0, e = 1;
        try {
            size_t slash = ls.find('/');
            h = std::stoll(ls.substr(1, slash == std::string::npos ? std::string::npos : slash - 1));
            if (slash != std::string::npos) e = std::stoll(ls.substr(slash + 1));
        } catch (const std::exception&) {
            throw om_error(errc::parse_error, "bad slope: " + ls);
        }
        IntPoly psi_int = parse_y_poly(levels[li][2]);
        require(!psi_int.is_zero(), errc::parse_error, "psi must be nonzero");
        int level_idx = t.order() + 1;
        TowerPoly psi{level_idx, {}};
        for (const auto& c : psi_int.coeffs())
            psi.c.push_back(t.tower().from_int(level_idx, c));
        psi.trim();
        OMType child = t.extended(h, e, psi);
        t = std::move(child);
        // the next level's phi, when given, is installed as this type's
        // representative; otherwise the canonical one is constructed
        if (li + 1 < levels.size()) t.set_representative(parse_poly(levels[li + 1][0]));
    }
    return t;
}

int cmd_factor(long long p, const std::string& fsrc, bool json_out, bool squarefree, bool trace,
               std::ostream& out, std::ostream& err) {
    IntPoly f = parse_poly(fsrc);
    bool applied = false;
    if (squarefree) {
        require(f.is_monic(), errc::not_monic, "input polynomial must be monic");
        IntPoly rad = squarefree_part(f);
        applied = rad != f;
        f = rad;
    }
    auto t0 = std::chrono::steady_clock::now();
    MontesResult res = montes_factor(f, p, trace ? &err : nullptr);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (json_out)
        out << report_to_json(res, f, p, applied, ms).dump(2) << "\n";
    else
        out << report_to_text(res, f, p);
    return 0;
}

int cmd_polygon(long long p, const std::string& fsrc, const std::string& type_spec,
                const std::string& svg_path, std::ostream& out) {
    IntPoly f = parse_poly(fsrc);
    require(!f.is_zero(), errc::zero_polynomial, "cannot draw the polygon of 0");
    OMType t = [&] {
        if (!type_spec.empty()) return parse_type_spec(type_spec, p);
        FieldTower base(p);
        auto facs = factor_poly(base, reduce_mod_p(base, f));
        require(!facs.empty(), errc::zero_polynomial, "f vanishes modulo p");
        return OMType::order0(p, facs.front().first);
    }();
    t.ensure_representative();
    int r = t.order() + 1;
    Workspace ws;
    NewtonData nd = t.newton_polygon(f, r, &ws);
    if (!svg_path.empty()) {
        std::ofstream os(svg_path);
        require(static_cast<bool>(os), errc::parse_error, "cannot open " + svg_path);
        os << polygon_to_svg(nd.polygon, nd.points);
        out << "wrote " << svg_path << "\n";
    } else {
        out << "order " << r << " polygon of f with respect to phi_" << r << " = "
            << t.phi_at(r).str() << "\n";
        out << polygon_to_ascii(nd.polygon, nd.points);
        out << polygon_to_json(nd.polygon) << "\n";
    }
    return 0;
}

int cmd_index(long long p, const std::string& fsrc, std::ostream& out) {
    IntPoly f = parse_poly(fsrc);
    MontesResult res = montes_factor(f, p);
    out << "ind(f) = " << to_string(res.ledger.total()) << "\n";
    for (size_t r = 0; r < res.ledger.per_order.size(); ++r)
        out << "  ind_" << (r + 1) << "(f) = " << to_string(res.ledger.per_order[r]) << "\n";
    return 0;
}

int cmd_resultant(long long p, const std::string& fsrc, const std::string& gsrc,
                  std::ostream& out) {
    IntPoly P = parse_poly(fsrc);
    IntPoly Q = parse_poly(gsrc);
    ResBreakdown rb = res_valuation(P, Q, p);
    out << "Res(P,Q) = " << to_string(rb.exact_resultant) << "\n";
    out << "v_" << p << "(Res) = " << to_string(rb.valuation) << "\n";
    out << "by order:";
    for (size_t r = 0; r < rb.per_order.size(); ++r)
        out << " Res_" << (r + 1) << " = " << to_string(rb.per_order[r]);
    out << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-adic factorization with higher-order Newton polygons"};
    app.name("om-factor");
    app.require_subcommand(1);

    std::string prime, fsrc, gsrc, type_spec, svg_path;
    bool json_out = false, text_out = false, squarefree = false, trace = false, ascii = false;

    auto* fac = app.add_subcommand("factor", "factor f over Q_p");
    fac->add_option("-p,--prime", prime, "prime p")->required();
    fac->add_option("-f,--poly", fsrc, "monic integer polynomial in x")->required();
    fac->add_flag("--json", json_out, "emit the JSON report");
    fac->add_flag("--text", text_out, "emit the text report (default)");
    fac->add_flag("--squarefree", squarefree, "replace f by its squarefree part first");
    fac->add_flag("--trace", trace, "dump per-order polygons and residual polynomials");

    auto* pol = app.add_subcommand("polygon", "render a principal Newton polygon of f");
    pol->add_option("-p,--prime", prime, "prime p")->required();
    pol->add_option("-f,--poly", fsrc, "integer polynomial in x")->required();
    pol->add_option("--type", type_spec, "type spec phi:lambda:psi[;...] fixing the order");
    pol->add_option("--svg", svg_path, "write an SVG rendering to this path");
    pol->add_flag("--ascii", ascii, "render to stdout (default)");

    auto* idx = app.add_subcommand("index", "ind(f) and its per-order breakdown");
    idx->add_option("-p,--prime", prime, "prime p")->required();
    idx->add_option("-f,--poly", fsrc, "monic integer polynomial in x")->required();

    auto* res = app.add_subcommand("resultant", "v_p(Res(P,Q)) and its per-order breakdown");
    res->add_option("-p,--prime", prime, "prime p")->required();
    res->add_option("-f,--poly", fsrc, "monic integer polynomial P")->required();
    res->add_option("-g,--poly2", gsrc, "monic integer polynomial Q")->required();

    std::vector<const char*> argv;
    argv.push_back("om-factor");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (const char* env = std::getenv("OM_FACTOR_TRACE"); env && std::string(env) == "1")
            trace = true;
        long long p = parse_prime(prime);
        if (fac->parsed()) return cmd_factor(p, fsrc, json_out && !text_out, squarefree, trace, out, err);
        if (pol->parsed()) return cmd_polygon(p, fsrc, type_spec, svg_path, out);
        if (idx->parsed()) return cmd_index(p, fsrc, out);
        if (res->parsed()) return cmd_resultant(p, fsrc, gsrc, out);
        return 1;
    } catch (const om_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace omf
