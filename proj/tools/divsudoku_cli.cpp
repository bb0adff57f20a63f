// divsudoku: command-line front end for the division-sudoku library.
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divsudoku/algebra.hpp"
#include "divsudoku/classification.hpp"
#include "divsudoku/core.hpp"
#include "divsudoku/corpus.hpp"
#include "divsudoku/enumeration.hpp"
#include "divsudoku/invariants.hpp"
#include "divsudoku/io.hpp"
#include "divsudoku/multipart.hpp"

using json = nlohmann::json;
using namespace divsudoku;

namespace {

struct Options {
    std::string format = "text";
    int threads = 1;
    bool count_only = false;
    std::vector<std::string> files;
    std::vector<std::string> named;
    std::vector<int> appendix;
};

struct Input {
    std::string label;
    LatinSquare square;
};

std::vector<Input> gather_inputs(const Options& opt) {
    std::vector<Input> in;
    for (const auto& f : opt.files) {
        auto squares = parse_squares(read_file(f));
        for (size_t i = 0; i < squares.size(); ++i) {
            std::string label = f;
            if (squares.size() > 1) label += "#" + std::to_string(i + 1);
            in.push_back({label, squares[i]});
        }
    }
    for (const auto& name : opt.named) in.push_back({name, corpus::named(name)});
    for (int k : opt.appendix)
        in.push_back({"DS(9," + std::to_string(k) + ")", corpus::appendix(k)});
    return in;
}

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

struct Report {
    json j;
    bool pass = true;
    std::string text;

    Report(const std::string& command, const Options& opt) {
        j["command"] = command;
        j["inputs"] = json::array();
        for (const auto& f : opt.files) j["inputs"].push_back(f);
        for (const auto& n : opt.named) j["inputs"].push_back(n);
        for (int k : opt.appendix) j["inputs"].push_back("DS(9," + std::to_string(k) + ")");
        j["results"] = json::object();
        j["timings"] = json::object();
    }

    int finish(const Options& opt) {
        j["pass"] = pass;
        if (opt.format == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
        return pass ? 0 : 1;
    }
};

std::string render_partitions(const std::vector<SudokuPartition>& ps) {
    std::string out;
    for (const auto& p : ps) {
        if (!out.empty()) out += " ";
        out += render_partition(p);
    }
    return out;
}

int cmd_check(const Options& opt) {
    Report rep("check", opt);
    Timer t;
    rep.j["results"]["squares"] = json::array();
    for (const auto& [label, L] : gather_inputs(opt)) {
        bool latin = L.is_latin();
        bool ds = latin && L.n == 9 && is_division_sudoku_standard(L);
        bool sud = false;
        if (latin) {
            int m = 1;
            while (m * m < L.n) ++m;
            sud = m * m == L.n && is_sudoku(L, standard_tri_partition(m));
            if (m * m == L.n) ds = is_division_sudoku_standard(L);
        }
        rep.j["results"]["squares"].push_back(
            {{"label", label}, {"latin", latin}, {"sudoku", sud}, {"division_sudoku", ds}});
        rep.text += label + ": latin=" + (latin ? "yes" : "no") + " sudoku=" + (sud ? "yes" : "no") +
                    " division-sudoku=" + (ds ? "yes" : "no") + "\n";
        if (!ds) rep.pass = false;
    }
    rep.j["timings"]["total_s"] = t.seconds();
    return rep.finish(opt);
}

int cmd_invariants(const Options& opt) {
    Report rep("invariants", opt);
    Timer t;
    rep.j["results"]["squares"] = json::array();
    for (const auto& [label, L] : gather_inputs(opt)) {
        auto iota = intercalate_invariant(L);
        auto mu = minisquare_invariant(L);
        rep.j["results"]["squares"].push_back({{"label", label},
                                               {"iota", render(iota)},
                                               {"mu", render(mu)},
                                               {"iota_key", canonical_key(iota)},
                                               {"mu_key", canonical_key(mu)}});
        rep.text += label + "\n  iota: " + render(iota) + "\n  mu:   " + render(mu) + "\n";
    }
    rep.j["timings"]["total_s"] = t.seconds();
    return rep.finish(opt);
}

int cmd_enumerate(const Options& opt) {
    Report rep("enumerate", opt);
    Timer t;
    auto squares = enumerate_extensions(opt.threads);
    long long count = static_cast<long long>(squares.size());
    long long total = total_standard_count(count);
    rep.j["results"]["extensions"] = count;
    rep.j["results"]["total_standard"] = total;
    rep.j["results"]["factorization"] = "2^11 * 3^8 * " + std::to_string(count);
    rep.j["timings"]["total_s"] = t.seconds();
    if (opt.count_only) {
        rep.text = "extensions: " + std::to_string(count) + "\ntotal standard: " +
                   std::to_string(total) + " = 2^11 * 3^8 * " + std::to_string(count) + "\n";
    } else {
        for (const auto& L : squares) rep.text += render_square(L) + "\n";
        if (opt.format == "json") {
            rep.j["results"]["squares"] = json::array();
            for (const auto& L : squares) rep.j["results"]["squares"].push_back(render_square(L));
        }
    }
    return rep.finish(opt);
}

int cmd_classify(const Options& opt, const std::string& level) {
    Report rep("classify", opt);
    rep.j["results"]["level"] = level;
    Timer t;
    auto extensions = enumerate_extensions(opt.threads);
    rep.j["timings"]["enumerate_s"] = t.seconds();
    Timer t2;
    ClassPartition ds = ds_classes(extensions, opt.threads);
    rep.j["timings"]["ds_classes_s"] = t2.seconds();
    rep.j["results"]["ds_classes"] = ds.count();
    json hist = json::object();
    for (auto [size, mult] : ds.size_histogram) hist[std::to_string(size)] = mult;
    rep.j["results"]["size_histogram"] = hist;
    rep.text += "ds-classes: " + std::to_string(ds.count()) + "\nsize histogram:";
    for (auto [size, mult] : ds.size_histogram)
        rep.text += " " + std::to_string(mult) + "x" + std::to_string(size);
    rep.text += "\n";

    if (level == "main") {
        Timer t3;
        ClassPartition main = main_ds_classes(ds.representatives, opt.threads);
        rep.j["timings"]["main_classes_s"] = t3.seconds();
        rep.j["results"]["main_ds_classes"] = main.count();
        rep.text += "main ds-classes: " + std::to_string(main.count()) + "\n";
        if (!opt.count_only) {
            json groups = json::array();
            for (const auto& mem : main.members) {
                json g = json::array();
                std::string line = "  {";
                for (size_t i = 0; i < mem.size(); ++i) {
                    g.push_back(mem[i] + 1);  // 1-based ds-class ids
                    line += (i ? "," : "") + std::to_string(mem[i] + 1);
                }
                groups.push_back(g);
                rep.text += line + "}\n";
            }
            rep.j["results"]["groups"] = groups;
        }
    } else if (level == "isotopism") {
        Timer t3;
        ClassPartition iso = isotopism_classes(ds.representatives, opt.threads);
        rep.j["timings"]["isotopism_classes_s"] = t3.seconds();
        rep.j["results"]["isotopism_classes"] = iso.count();
        rep.text += "isotopism classes: " + std::to_string(iso.count()) + "\n";
        if (!opt.count_only) {
            json merges = json::array();
            for (const auto& mem : iso.members)
                if (mem.size() > 1) {
                    json g = json::array();
                    std::string line = "  merged: {";
                    for (size_t i = 0; i < mem.size(); ++i) {
                        g.push_back(mem[i] + 1);
                        line += (i ? "," : "") + std::to_string(mem[i] + 1);
                    }
                    merges.push_back(g);
                    rep.text += line + "}\n";
                }
            rep.j["results"]["merges"] = merges;
        }
    }
    rep.j["timings"]["total_s"] = t.seconds();
    return rep.finish(opt);
}

int cmd_tripartitions(const Options& opt) {
    Report rep("tripartitions", opt);
    Timer t;
    rep.j["results"]["squares"] = json::array();
    for (const auto& [label, L] : gather_inputs(opt)) {
        auto tps = tri_partitions(L);
        json entry = {{"label", label}, {"pi", tps.size()}};
        rep.text += label + ": pi = " + std::to_string(tps.size()) + "\n";
        if (!opt.count_only) {
            json list = json::array();
            for (const auto& tp : tps) {
                list.push_back({render_partition(tp.rows), render_partition(tp.cols),
                                render_partition(tp.syms)});
                rep.text += "  " + render_partition(tp.rows) + " " + render_partition(tp.cols) +
                            " " + render_partition(tp.syms) + "\n";
            }
            entry["tri_partitions"] = list;
        }
        rep.j["results"]["squares"].push_back(entry);
    }
    rep.j["timings"]["total_s"] = t.seconds();
    return rep.finish(opt);
}

int cmd_synchronize(const Options& opt) {
    Report rep("synchronize", opt);
    Timer t;
    rep.j["results"]["squares"] = json::array();
    for (const auto& [label, L] : gather_inputs(opt)) {
        auto direct = sigma_partitions(L);
        auto res = synchronize(L);
        json entry = {{"label", label},
                      {"sigma_direct", direct.size()},
                      {"sigma_class", res.sigma},
                      {"partitions", render_partitions(res.partitions)}};
        rep.text += label + ": sigma(square) = " + std::to_string(direct.size()) +
                    ", sigma(class) = " + std::to_string(res.sigma) + "\n";
        if (!opt.count_only) {
            rep.text += "  witness partitions: " + render_partitions(res.partitions) + "\n";
            entry["witness"] = render_square(res.square);
            rep.text += render_square(res.square);
        }
        rep.j["results"]["squares"].push_back(entry);
    }
    rep.j["timings"]["total_s"] = t.seconds();
    return rep.finish(opt);
}

int cmd_construct(const Options& opt, int q, const std::string& kind, int c) {
    Report rep("construct", opt);
    Timer t;
    auto r = construction_report(q, kind, c, opt.threads);
    rep.j["results"] = {{"q", q},
                        {"kind", kind},
                        {"c", r.c},
                        {"verified_partitions", r.verified_partitions.size()},
                        {"lines_affine", r.lines_affine},
                        {"isotopic_to_group", r.isotopic_to_group},
                        {"exact_sigma", r.exact_sigma}};
    rep.text += "q=" + std::to_string(q) + " kind=" + kind + " c=" + std::to_string(r.c) + "\n";
    rep.text += "verified subspace coset partitions: " +
                std::to_string(r.verified_partitions.size()) + "\n";
    rep.text += std::string("line partitions affine: ") + (r.lines_affine ? "yes" : "no") + "\n";
    rep.text += std::string("isotopic to group: ") + (r.isotopic_to_group ? "yes" : "no") + "\n";
    if (r.exact_sigma >= 0) rep.text += "exact sigma: " + std::to_string(r.exact_sigma) + "\n";
    if (!opt.count_only) {
        rep.text += render_square(r.square);
        rep.j["results"]["square"] = render_square(r.square);
    }
    rep.j["timings"]["total_s"] = t.seconds();
    return rep.finish(opt);
}

int cmd_assoc_count(const Options& opt) {
    Report rep("assoc-count", opt);
    Timer t;
    rep.j["results"]["squares"] = json::array();
    for (const auto& [label, L] : gather_inputs(opt)) {
        long long n = count_associative_triples(L);
        bool idem = is_idempotent(L);
        rep.j["results"]["squares"].push_back(
            {{"label", label}, {"associative_triples", n}, {"idempotent", idem}});
        rep.text += label + ": associative triples = " + std::to_string(n) +
                    ", idempotent = " + (idem ? "yes" : "no") + "\n";
    }
    rep.j["timings"]["total_s"] = t.seconds();
    return rep.finish(opt);
}

int cmd_corpus_verify(const Options& opt) {
    Report rep("corpus-verify", opt);
    Timer t;
    std::vector<std::string> failures;
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };

    std::vector<LatinSquare> reps;
    for (int k = 1; k <= 186; ++k) {
        LatinSquare L = corpus::appendix(k);
        std::string label = "DS(9," + std::to_string(k) + ")";
        require(L.is_latin(), label + ": latin");
        require(is_division_sudoku_standard(L), label + ": standard division sudoku");
        require(extends_template(L), label + ": extends the enumeration template");
        reps.push_back(L);
    }
    // Pairwise non-ds-isotopic: the 186 squares fall into 186 distinct classes.
    ClassPartition classes = ds_classes(reps, opt.threads);
    require(classes.count() == 186, "appendix squares pairwise non-ds-isotopic");

    LatinSquare L0 = corpus::named("L0");
    require(is_division_sudoku_standard(L0), "L0: standard division sudoku");
    require(count_associative_triples(L0) == 9, "L0: 9 associative triples");

    LatinSquare Q = corpus::named("Q");
    require(is_idempotent(Q), "Q: idempotent");
    require(find_intercalates(Q).size() == 18, "Q: 18 intercalates");
    auto d = division_tables(Q);
    require(d.rdiv == corpus::named("Qrdiv"), "Q: right division table matches");
    require(d.ldiv == corpus::named("Qldiv"), "Q: left division table matches");

    require(render(intercalate_invariant(corpus::named("ex-iota"))) ==
                "(B1,S3,P3) (B2,S2,P1) (B3,S1,P2) (B3,S3,P1)",
            "iota example square: hyperedges");
    require(render(minisquare_invariant(corpus::named("ex-mu"))) ==
                "B1->S1 B2->S3 B3->S2 P1->S2 P2->S1 P3->S3",
            "mu example square: edges");

    for (const auto& label : {"L17", "L175", "L179"})
        require(is_division_sudoku_standard(corpus::named(label)),
                std::string(label) + ": standard division sudoku");

    rep.j["results"]["appendix_squares"] = 186;
    rep.j["results"]["failures"] = failures;
    rep.text += "corpus squares checked: 186 appendix + named squares\n";
    if (failures.empty()) {
        rep.text += "all corpus checks passed\n";
    } else {
        for (const auto& f : failures) rep.text += "FAIL: " + f + "\n";
        rep.pass = false;
    }
    rep.j["timings"]["total_s"] = t.seconds();
    return rep.finish(opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"division sudoku toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::string level = "ds";
    int q = 3, c = -1;
    std::string kind = "field";

    auto add_common = [&](CLI::App* sub, bool with_inputs) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--count-only", opt.count_only, "print counts only");
        if (with_inputs) {
            sub->add_option("files", opt.files, "square files");
            sub->add_option("--named", opt.named, "named corpus square");
            sub->add_option("--appendix", opt.appendix, "appendix square index (1..186)")
                ->check(CLI::Range(1, 186));
        }
    };

    auto* c_check = app.add_subcommand("check", "test the division-sudoku property");
    add_common(c_check, true);
    auto* c_inv = app.add_subcommand("invariants", "intercalate and minisquare invariants");
    add_common(c_inv, true);
    auto* c_enum = app.add_subcommand("enumerate", "enumerate the template extensions");
    add_common(c_enum, false);
    auto* c_cls = app.add_subcommand("classify", "classify the template extensions");
    add_common(c_cls, false);
    c_cls->add_option("--level", level, "ds | main | isotopism")
        ->check(CLI::IsMember({"ds", "main", "isotopism"}));
    auto* c_tri = app.add_subcommand("tripartitions", "division-sudoku tri-partitions");
    add_common(c_tri, true);
    auto* c_sync = app.add_subcommand("synchronize", "synchronized partitions and sigma");
    add_common(c_sync, true);
    auto* c_con = app.add_subcommand("construct", "Stein squares over fields and nearfields");
    add_common(c_con, false);
    c_con->add_option("--q", q, "subfield order")->required();
    c_con->add_option("--kind", kind, "field | nearfield")
        ->check(CLI::IsMember({"field", "nearfield"}));
    c_con->add_option("--c", c, "twist element code");
    auto* c_assoc = app.add_subcommand("assoc-count", "count associative triples");
    add_common(c_assoc, true);
    auto* c_corpus = app.add_subcommand("corpus-verify", "verify the embedded corpus");
    add_common(c_corpus, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_check)) return cmd_check(opt);
        if (app.got_subcommand(c_inv)) return cmd_invariants(opt);
        if (app.got_subcommand(c_enum)) return cmd_enumerate(opt);
        if (app.got_subcommand(c_cls)) return cmd_classify(opt, level);
        if (app.got_subcommand(c_tri)) return cmd_tripartitions(opt);
        if (app.got_subcommand(c_sync)) return cmd_synchronize(opt);
        if (app.got_subcommand(c_con)) return cmd_construct(opt, q, kind, c);
        if (app.got_subcommand(c_assoc)) return cmd_assoc_count(opt);
        if (app.got_subcommand(c_corpus)) return cmd_corpus_verify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
