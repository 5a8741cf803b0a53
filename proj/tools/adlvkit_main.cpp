// adlvkit command line: batch front end over the library. Subcommands
// mirror the module operations; outputs are deterministic and available as
// tty tables, JSON or CSV.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "adlvkit/suite.hpp"

using affine::BasicElement;
using affine::ExtAffineElement;
using rootdata::RootDatum;
using adlv::Int;
using adlv::IntVec;
using nlohmann::json;

namespace {

struct Output {
    std::string path;             // empty: stdout
    std::string format = "table"; // table | json | csv

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << "\n";
        } else {
            std::ofstream os(path);
            if (!os) throw adlv::Error("cannot open output file " + path);
            os << text;
        }
    }
};

RootDatum build_datum_cli(const std::string& text) {
    try {
        return RootDatum::build(text);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("datum", e.what());
    }
}

IntVec validated_mu(const RootDatum& rd, const IntVec& mu, bool minuscule) {
    if (static_cast<int>(mu.size()) != rd.rank_y())
        throw CLI::ValidationError("mu", "wrong length for the datum");
    if (!rd.is_dominant(mu))
        throw CLI::ValidationError("mu", "coweight is not dominant");
    if (minuscule && !rd.is_minuscule(mu))
        throw CLI::ValidationError("mu", "coweight is not minuscule");
    return mu;
}

IntVec parse_coords(const std::string& text) {
    IntVec v;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            v.push_back(std::stoll(part));
        } catch (...) {
            throw CLI::ValidationError("coordinate list", "bad entry '" + part + "'");
        }
    }
    if (v.empty()) throw CLI::ValidationError("coordinate list", "empty");
    return v;
}

// b is either an integer exponent of the first Omega generator, a word like
// w1^2, or a comma list of exponents over the generators of Omega
BasicElement parse_b(const RootDatum& rd, const std::string& text) {
    auto gens = affine::omega_generators(rd);
    auto from_exponents = [&](const std::vector<Int>& exps) {
        if (exps.size() > gens.size())
            throw CLI::ValidationError("b", "more exponents than Omega generators");
        ExtAffineElement x = ExtAffineElement::identity(rd.rank_y());
        for (size_t i = 0; i < exps.size(); ++i)
            x = x.mul(affine::power(gens[i].element, exps[i]));
        return BasicElement{x};
    };
    std::string s = text;
    if (s.rfind("w", 0) == 0) {
        size_t caret = s.find('^');
        int idx = std::stoi(s.substr(1, caret == std::string::npos
                                            ? std::string::npos
                                            : caret - 1)) - 1;
        Int e = caret == std::string::npos ? 1 : std::stoll(s.substr(caret + 1));
        if (idx < 0 || idx >= static_cast<int>(gens.size()))
            throw CLI::ValidationError("b", "no such Omega generator");
        std::vector<Int> exps(idx + 1, 0);
        exps[idx] = e;
        return from_exponents(exps);
    }
    if (s.find(',') != std::string::npos) return from_exponents(parse_coords(s));
    try {
        return from_exponents({std::stoll(s)});
    } catch (const CLI::Error&) {
        throw;
    } catch (...) {
        throw CLI::ValidationError("b", "cannot parse '" + text + "'");
    }
}

std::string vec_str(const IntVec& v) { return adlv::to_string(v); }

std::string table_row(const std::vector<std::string>& cells) {
    std::string s;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) s += "  ";
        s += cells[i];
    }
    return s + "\n";
}

Int env_window() {
    const char* env = std::getenv("ADLVKIT_WINDOW");
    if (!env || !*env) return 0;
    return std::stoll(env);
}

int run_classify(const std::string& datum, const std::string& bspec,
                 const IntVec& mu_in, Int window, const Output& out) {
    RootDatum rd = build_datum_cli(datum);
    IntVec mu = validated_mu(rd, mu_in, true);
    BasicElement b = parse_b(rd, bspec);
    auto part = strata::count_top_classes(rd, mu, b, window);
    json rows = json::array();
    std::string table = table_row({"lambda", "natural", "dim", "top", "small",
                                   "flat", "class"});
    std::vector<IntVec> lams;
    strata::enumerate_nonempty(rd, mu, b, window,
                               [&](const IntVec& lam) { lams.push_back(lam); });
    std::sort(lams.begin(), lams.end());
    bool superb = strata::is_superbasic(rd, b);
    for (const auto& lam : lams) {
        auto rep = strata::classify_lambda(rd, mu, b, lam);
        std::optional<int> cid;
        auto it = part.class_of.find(lam);
        if (it != part.class_of.end()) cid = it->second;
        json row = json::parse(strata::report_json(rd, rep, cid));
        if (superb) row["flat"] = strata::lambda_flat(rd, b, lam);
        rows.push_back(row);
        table += table_row(
            {vec_str(lam), vec_str(rep.natural), std::to_string(rep.stratum_dim),
             rep.is_top ? "top" : "-",
             rep.is_small ? (*rep.is_small ? "small" : "-") : "-",
             superb ? vec_str(strata::lambda_flat(rd, b, lam)) : "-",
             cid ? std::to_string(*cid) : "-"});
    }
    if (out.format == "json") {
        json j{{"schema", 1},
               {"datum", rd.spec_text()},
               {"b", affine::to_text(rd, b.omega)},
               {"mu", mu},
               {"window", part.window_bound},
               {"rows", rows}};
        out.write(j.dump(2));
    } else if (out.format == "csv") {
        std::string csv = "lambda;natural;dim;top;small;flat;class\n";
        for (const auto& row : rows) {
            csv += row["lambda"].dump() + ";" + row["natural"].dump() + ";" +
                   row["dim"].dump() + ";" + row["top"].dump() + ";" +
                   (row.contains("small") ? row["small"].dump() : "") + ";" +
                   (row.contains("flat") ? row["flat"].dump() : "") + ";" +
                   (row.contains("class_id") ? row["class_id"].dump() : "") + "\n";
        }
        out.write(csv);
    } else {
        out.write(table);
    }
    return 0;
}

int run_count(const std::string& datum, const std::string& bspec,
              const IntVec& mu_in, Int window, const Output& out) {
    RootDatum rd = build_datum_cli(datum);
    IntVec mu = validated_mu(rd, mu_in, true);
    BasicElement b = parse_b(rd, bspec);
    auto part = strata::count_top_classes(rd, mu, b, window);
    auto ul = isocrystal::ul_best(rd, b);
    auto cr = crystal::crystal_generate(rd, mu);
    Int classes = static_cast<Int>(part.representatives.size());
    Int mult = crystal::weight_mult_class(rd, cr, ul);
    bool ok = part.stabilized && classes == mult;
    json j{{"schema", 1},
           {"datum", rd.spec_text()},
           {"b", affine::to_text(rd, b.omega)},
           {"mu", mu},
           {"window", part.window_bound},
           {"stabilized", part.stabilized},
           {"classes", classes},
           {"crystal", mult},
           {"dim", isocrystal::adlv_dim(rd, mu, b)},
           {"ul", ul.representative},
           {"verdict", ok ? "OK" : "MISMATCH"}};
    if (out.format == "json") {
        out.write(j.dump(2));
    } else if (out.format == "csv") {
        out.write("classes;crystal;dim;stabilized;verdict\n" +
                  std::to_string(classes) + ";" + std::to_string(mult) + ";" +
                  j["dim"].dump() + ";" + (part.stabilized ? "1" : "0") + ";" +
                  (ok ? "OK" : "MISMATCH") + "\n");
    } else {
        std::string t = table_row({"classes", "crystal", "dim", "ul", "verdict"});
        t += table_row({std::to_string(classes), std::to_string(mult),
                        j["dim"].dump(), vec_str(ul.representative),
                        ok ? "OK" : "MISMATCH"});
        out.write(t);
    }
    if (!ok) std::cerr << j.dump() << std::endl;
    return ok ? 0 : 1;
}

int run_crystal(const std::string& datum, const IntVec& mu_in, const Output& out) {
    RootDatum rd = build_datum_cli(datum);
    IntVec mu = validated_mu(rd, mu_in, false);
    auto c = crystal::crystal_generate(rd, mu);
    if (out.format == "json") {
        out.write(crystal::export_json(rd, c));
        return 0;
    }
    std::map<IntVec, Int> mult;
    for (const auto& w : c.weights) mult[w] += 1;
    std::string t = "elements " + std::to_string(c.size()) + "\n";
    t += table_row({"weight", "multiplicity"});
    std::string csv = "weight;multiplicity\n";
    for (const auto& [w, m] : mult) {
        t += table_row({vec_str(w), std::to_string(m)});
        csv += vec_str(w) + ";" + std::to_string(m) + "\n";
    }
    out.write(out.format == "csv" ? csv : t);
    return 0;
}

int run_tensor(const std::string& datum, const std::vector<IntVec>& mus_in,
               const Output& out) {
    RootDatum rd = build_datum_cli(datum);
    std::vector<IntVec> mus;
    for (const auto& m : mus_in) mus.push_back(validated_mu(rd, m, false));
    auto dec = crystal::tensor_decompose(rd, mus);
    json rows = json::array();
    std::string t = table_row({"highest weight", "multiplicity"});
    std::string csv = "highest_weight;multiplicity\n";
    for (const auto& [mu, m] : dec) {
        rows.push_back({{"mu", mu}, {"mult", m}});
        t += table_row({vec_str(mu), std::to_string(m)});
        csv += vec_str(mu) + ";" + std::to_string(m) + "\n";
    }
    if (out.format == "json")
        out.write(json{{"schema", 1}, {"rows", rows}}.dump(2));
    else
        out.write(out.format == "csv" ? csv : t);
    return 0;
}

int run_restrict(const std::string& datum, const IntVec& mu_in,
                 const std::vector<int>& levi, const Output& out) {
    RootDatum rd = build_datum_cli(datum);
    IntVec mu = validated_mu(rd, mu_in, false);
    std::vector<int> J;
    for (int k : levi) J.push_back(k - 1);  // 1-based on the command line
    auto dec = crystal::restrict_levi(rd, mu, J);
    json rows = json::array();
    std::string t = table_row({"Levi-highest weight", "multiplicity"});
    std::string csv = "levi_highest_weight;multiplicity\n";
    for (const auto& [eta, m] : dec) {
        rows.push_back({{"eta", eta}, {"mult", m}});
        t += table_row({vec_str(eta), std::to_string(m)});
        csv += vec_str(eta) + ";" + std::to_string(m) + "\n";
    }
    if (out.format == "json")
        out.write(json{{"schema", 1}, {"rows", rows}}.dump(2));
    else
        out.write(out.format == "csv" ? csv : t);
    return 0;
}

int run_superbasic(int n, Int m, const std::vector<int>& ks, const Output& out) {
    const int d = static_cast<int>(ks.size());
    rootdata::DatumSpec spec;
    spec.letter = 'A';
    spec.rank = n - 1;
    spec.isogeny = rootdata::Isogeny::gl_product;
    spec.copies = d;
    RootDatum prod = RootDatum::build(spec);
    IntVec e(n * d, 0);
    e[(d - 1) * n] = 1;
    BasicElement bb{affine::power(affine::omega_part(prod, e), m)};
    IntVec bmu(n * d, 0);
    for (int t = 0; t < d; ++t)
        for (int i = 0; i < ks[t]; ++i) bmu[t * n + i] = 1;
    json rows = json::array();
    std::string t = table_row({"lambda", "a-rows", "flat", "dim", "top"});
    strata::enumerate_nonempty(prod, bmu, bb, 0, [&](const IntVec& lam) {
        std::vector<IntVec> tuple(d, IntVec(n));
        for (int tt = 0; tt < d; ++tt)
            for (int i = 0; i < n; ++i) tuple[tt][i] = lam[tt * n + i];
        auto tab = strata::superbasic_table(n, d, m, tuple);
        std::string arows, flats;
        for (int tt = 0; tt < d; ++tt) {
            arows += vec_str(tab.a_table[tt]);
            flats += vec_str(tab.lambda_flat[tt]);
        }
        rows.push_back({{"lambda", lam},
                        {"a", tab.a_table},
                        {"flat", tab.lambda_flat},
                        {"dim", tab.dim_value},
                        {"top", tab.is_top}});
        t += table_row({vec_str(lam), arows, flats, std::to_string(tab.dim_value),
                        tab.is_top ? "top" : "-"});
    });
    if (out.format == "json")
        out.write(json{{"schema", 1},
                       {"n", n},
                       {"m", m},
                       {"pieces", ks},
                       {"rows", rows}}
                      .dump(2));
    else
        out.write(t);
    return 0;
}

int run_appendixb(const std::string& datum, bool all_b, const std::string& bspec,
                  bool exhaustive, const Output& out) {
    RootDatum rd = build_datum_cli(datum);
    std::vector<BasicElement> bs;
    if (all_b)
        bs = appendixb::basic_representatives(rd);
    else
        bs.push_back(parse_b(rd, bspec));
    json certs = json::array();
    bool ok = true;
    for (const auto& b : bs) {
        auto rep = appendixb::verify_uniqueness(rd, b, exhaustive);
        ok &= rep.all_fixed;
        certs.push_back(json::parse(appendixb::certification_json(rd, b, rep)));
    }
    json j{{"schema", 1}, {"datum", rd.spec_text()}, {"certifications", certs}};
    if (out.format == "table") {
        std::string t = table_row({"b", "J", "candidates", "mode", "verdict"});
        for (const auto& c : certs)
            t += table_row({c["b"].get<std::string>(), c["J"].dump(),
                            c["candidates"].dump(),
                            c["mode"].get<std::string>(),
                            c["verdict"].get<std::string>()});
        out.write(t);
    } else {
        out.write(j.dump(2));
    }
    if (!ok) std::cerr << j.dump() << std::endl;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adlvkit: affine Weyl group, crystal and stratum combinatorics"};
    app.require_subcommand(1);

    std::string datum, bspec = "1";
    std::string mu_text;
    std::vector<std::string> mu_list;
    std::string levi_text;
    Int window = env_window();
    Output out;
    int jobs = 1;
    int sb_n = 2;
    Int sb_m = 1;
    std::string sb_k;
    bool all_b = false, exhaustive = false, no_e7 = false;

    auto add_common = [&](CLI::App* cmd, bool needs_b) {
        cmd->add_option("datum", datum, "datum spec, e.g. A2:gl or D4:adjoint")
            ->required();
        if (needs_b)
            cmd->add_option("--b", bspec,
                            "basic element: exponent, w<k>^<e>, or exponent list");
        cmd->add_option("--window", window, "enumeration window override");
        cmd->add_option("--output", out.path, "output file (default stdout)");
        cmd->add_option("--format", out.format, "table|json|csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    auto* c_classify = app.add_subcommand("classify", "stratum reports over a window");
    add_common(c_classify, true);
    c_classify->add_option("--mu", mu_text, "dominant minuscule coweight")->required();

    auto* c_count = app.add_subcommand("count", "top classes vs crystal multiplicity");
    add_common(c_count, true);
    c_count->add_option("--mu", mu_text, "dominant minuscule coweight")->required();

    auto* c_crystal = app.add_subcommand("crystal", "crystal statistics / weight table");
    add_common(c_crystal, false);
    c_crystal->add_option("--mu", mu_text, "dominant coweight")->required();

    auto* c_tensor = app.add_subcommand("tensor", "tensor product decomposition");
    add_common(c_tensor, false);
    c_tensor->add_option("--mu", mu_list, "dominant coweight (repeat per factor)")
        ->required();

    auto* c_restrict = app.add_subcommand("restrict", "Levi restriction table");
    add_common(c_restrict, false);
    c_restrict->add_option("--mu", mu_text, "dominant coweight")->required();
    c_restrict->add_option("--levi", levi_text, "simple indices, 1-based, e.g. 1,3")
        ->required();

    auto* c_super = app.add_subcommand("superbasic", "GL_n table rows over a window");
    c_super->add_option("--n", sb_n, "matrix size n")->required();
    c_super->add_option("--m", sb_m, "superbasic exponent, coprime to n")->required();
    c_super->add_option("--k", sb_k, "minuscule column sizes per factor, e.g. 1,1")
        ->required();
    c_super->add_option("--output", out.path, "output file");
    c_super->add_option("--format", out.format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    auto* c_appb = app.add_subcommand("appendixb", "minimal Levi certification");
    add_common(c_appb, true);
    c_appb->add_flag("--all-b", all_b, "run every nontrivial class");
    c_appb->add_flag("--exhaustive", exhaustive, "full Weyl group scan");

    auto* c_suite = app.add_subcommand("suite", "full verification battery");
    c_suite->add_option("--jobs", jobs, "worker threads");
    c_suite->add_flag("--no-e7-exhaustive", no_e7, "skip the exhaustive E7 scan");
    c_suite->add_option("--output", out.path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_classify->parsed())
            return run_classify(datum, bspec, parse_coords(mu_text), window, out);
        if (c_count->parsed())
            return run_count(datum, bspec, parse_coords(mu_text), window, out);
        if (c_crystal->parsed())
            return run_crystal(datum, parse_coords(mu_text), out);
        if (c_tensor->parsed()) {
            std::vector<IntVec> mus;
            for (const auto& m : mu_list) mus.push_back(parse_coords(m));
            return run_tensor(datum, mus, out);
        }
        if (c_restrict->parsed()) {
            std::vector<int> J;
            for (Int k : parse_coords(levi_text)) J.push_back(static_cast<int>(k));
            return run_restrict(datum, parse_coords(mu_text), J, out);
        }
        if (c_super->parsed()) {
            std::vector<int> ks;
            for (Int k : parse_coords(sb_k)) ks.push_back(static_cast<int>(k));
            return run_superbasic(sb_n, sb_m, ks, out);
        }
        if (c_appb->parsed())
            return run_appendixb(datum, all_b, bspec, exhaustive, out);
        if (c_suite->parsed()) {
            suite::Options opt;
            opt.jobs = jobs;
            opt.e7_exhaustive = !no_e7;
            opt.window_override = window;
            std::ostringstream log;
            auto results = suite::run_acceptance(opt, out.path.empty() ? std::cout : log);
            if (!out.path.empty()) out.write(log.str());
            return suite::all_passed(results) ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", e.what()}}.dump() << std::endl;
        return 1;
    }
    return 2;
}
