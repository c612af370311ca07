// Command-line front end: enumeration, characteristic functions, surgery,
// searches, spectra and the worked-example fixtures.

#include "qtree/canon.hpp"
#include "qtree/enumerate.hpp"
#include "qtree/errors.hpp"
#include "qtree/fixtures.hpp"
#include "qtree/io.hpp"
#include "qtree/numerics.hpp"
#include "qtree/report.hpp"
#include "qtree/search.hpp"
#include "qtree/spectral.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using qtree::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitInterrupted = 130;

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted.store(true); }

struct Common {
    std::string out;
    std::string format = "json";
    std::string pendants = "dirichlet";
    int jobs = 1;
    std::string shard = "0/1";
    int max_n = qtree::kDefaultMaxEnumerationSize;
};

// Writes to --out via a temporary file and rename, or to stdout.
void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    const std::string tmp = c.out + ".partial";
    {
        std::ofstream f(tmp);
        if (!f) throw qtree::InputError("cannot write output file '" + c.out + "'");
        f << text;
    }
    std::filesystem::rename(tmp, c.out);
}

Json config_header(const std::string& command, const Common& c) {
    Json j;
    j["command"] = command;
    j["format"] = c.format;
    j["pendant_mode"] = c.pendants;
    j["jobs"] = c.jobs;
    j["shard"] = c.shard;
    j["max_n"] = c.max_n;
    return j;
}

qtree::search::SearchOptions search_options(const Common& c) {
    qtree::search::SearchOptions o;
    o.pendant_mode = qtree::parse_pendant_mode(c.pendants);
    o.jobs = c.jobs;
    o.shard = qtree::search::parse_shard(c.shard);
    o.max_n = c.max_n;
    o.cancel = &g_interrupted;
    return o;
}

int finish_report(const std::string& command, const Common& c, qtree::search::SearchReport r) {
    const Json header = config_header(command, c);
    for (const auto& [k, v] : header.items()) r.config[k] = v;
    if (c.format == "json") {
        emit(c, qtree::report::to_json(r).dump(2) + "\n");
    } else if (c.format == "csv") {
        emit(c, qtree::report::to_csv(r));
    } else if (c.format == "text") {
        emit(c, qtree::report::to_text(r));
    } else {
        throw qtree::InputError("field 'format': reports support json, csv or text");
    }
    if (!r.complete) return kExitInterrupted;
    return r.violations.empty() ? kExitOk : kExitViolation;
}

qtree::RootedTree rooted_from(const qtree::io::TreeFile& f, int root_flag, const std::string& what) {
    const int root = root_flag >= 0 ? root_flag : (f.root ? *f.root : -1);
    if (root < 0) throw qtree::InputError(what + ": no root given (use --root or a 'root' field)");
    return qtree::RootedTree(f.tree, root);
}

// A CharFn JSON file, or a tree file (rooted -> Neumann root function,
// unrooted -> root-free function).
qtree::CharFn charfn_from_file(const std::string& path, qtree::PendantMode mode) {
    std::ifstream in(path);
    if (!in) throw qtree::InputError("cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw qtree::InputError("'" + path + "': " + e.what());
    }
    if (j.is_object() && j.contains("s_exp")) return qtree::io::charfn_from_json(j);
    const auto tf = qtree::io::tree_from_json(j);
    if (tf.root) return qtree::char_fn(qtree::RootedTree(tf.tree, *tf.root), {qtree::RootCondition::Neumann, mode});
    return qtree::tree_char_fn(tf.tree, mode);
}

std::string charfn_text(const qtree::CharFn& f) {
    return "s^" + std::to_string(f.s_exp) + " * (" + f.poly.to_string() + ")";
}

void add_common(CLI::App* sub, Common& c, bool search_flags) {
    sub->add_option("--out,-o", c.out, "Output file (default: stdout)");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text", "dot"}));
    sub->add_option("--pendants", c.pendants, "Condition at non-root pendant vertices")
        ->check(CLI::IsMember({"dirichlet", "neumann"}));
    sub->add_option("--max-n", c.max_n, "Enumeration guard rail")->check(CLI::Range(1, 24));
    if (search_flags) {
        sub->add_option("--jobs,-j", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--shard", c.shard, "Contiguous enumeration block i/k");
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_sigint);

    CLI::App app{"Characteristic functions, surgery and cospectrality searches for equilateral trees"};
    app.require_subcommand(1);

    Common c;
    int n = 0;
    int n_max = 0;
    int root = -1;
    int vertex = -1;
    int attached_root = -1;
    int k = 10;
    std::string tree_path, base_path, attached_path, a_path, b_path, family_path, charfn_path;
    std::string root_cond = "neumann";
    bool include_pendant_roots = false;

    auto* enumerate = app.add_subcommand("enumerate", "List non-isomorphic trees on n vertices");
    enumerate->add_option("--n", n, "Vertex count")->required();
    add_common(enumerate, c, true);

    auto* charfn = app.add_subcommand("charfn", "Characteristic function of a rooted tree");
    charfn->add_option("--tree", tree_path, "Tree JSON file")->required();
    charfn->add_option("--root", root, "Root vertex (overrides the file)");
    charfn->add_option("--root-cond", root_cond, "Condition at the root")->check(CLI::IsMember({"neumann", "dirichlet"}));
    add_common(charfn, c, false);

    auto* attach_cmd = app.add_subcommand("attach", "Glue a rooted tree onto a vertex of a base tree");
    attach_cmd->add_option("--base", base_path, "Base tree JSON")->required();
    attach_cmd->add_option("--vertex", vertex, "Base vertex")->required();
    attach_cmd->add_option("--attached", attached_path, "Attached tree JSON")->required();
    attach_cmd->add_option("--attached-root", attached_root, "Root of the attached tree (overrides the file)");
    add_common(attach_cmd, c, false);

    auto* cospec = app.add_subcommand("cospectral", "Compare two characteristic functions (CharFn or tree files)");
    cospec->add_option("--a", a_path, "First CharFn or tree JSON")->required();
    cospec->add_option("--b", b_path, "Second CharFn or tree JSON")->required();
    add_common(cospec, c, false);

    auto* pairs = app.add_subcommand("search-pairs", "Cospectral groups among trees on n vertices");
    pairs->add_option("--n", n, "Vertex count")->required();
    add_common(pairs, c, true);

    auto* equal_m = app.add_subcommand("search-equal-m", "Vertex pairs with equal scattering data");
    equal_m->add_option("--n", n, "Vertex count");
    equal_m->add_option("--tree", tree_path, "Scan a single tree instead of all trees on n vertices");
    equal_m->add_flag("--include-pendant-roots", include_pendant_roots, "Also pair pendant vertices");
    add_common(equal_m, c, true);

    auto* verify = app.add_subcommand("verify", "Exhaustive check of the surgery and cospectrality theorems");
    verify->add_option("--n-max", n_max, "Largest tree size")->required();
    verify->add_option("--family", family_path, "JSON array of rooted trees to attach (default family if omitted)");
    add_common(verify, c, true);

    auto* remark = app.add_subcommand("remark35", "Cospectral attachments at vertices of unequal degree");
    remark->add_option("--n-max", n_max, "Largest tree size");
    remark->add_option("--tree", tree_path, "Scan a single tree");
    remark->add_flag("--include-pendant-roots", include_pendant_roots, "Also pair pendant vertices");
    add_common(remark, c, true);

    auto* spectrum = app.add_subcommand("spectrum", "Smallest eigenvalues at zero potential and unit edge length");
    spectrum->add_option("--tree", tree_path, "Tree JSON file");
    spectrum->add_option("--root", root, "Root vertex (overrides the file)");
    spectrum->add_option("--root-cond", root_cond, "Condition at the root")
        ->check(CLI::IsMember({"neumann", "dirichlet"}));
    spectrum->add_option("--charfn", charfn_path, "CharFn JSON instead of a tree");
    spectrum->add_option("--k", k, "Number of distinct eigenvalues")->check(CLI::PositiveNumber);
    add_common(spectrum, c, false);

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering plus a JSON sidecar");
    dot->add_option("--tree", tree_path, "Tree JSON file")->required();
    dot->add_option("--root", root, "Highlighted root");
    add_common(dot, c, false);

    auto* fixtures = app.add_subcommand("fixtures", "Run the worked-example checks");
    add_common(fixtures, c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        const auto mode = qtree::parse_pendant_mode(c.pendants);

        if (*enumerate) {
            const auto opts = search_options(c);
            const std::uint64_t total = qtree::count_trees(n, c.max_n);
            const std::uint64_t begin = total * static_cast<std::uint64_t>(opts.shard.index) /
                                        static_cast<std::uint64_t>(opts.shard.count);
            const std::uint64_t end = total * static_cast<std::uint64_t>(opts.shard.index + 1) /
                                      static_cast<std::uint64_t>(opts.shard.count);
            const auto trees = qtree::enumerate_trees_range(n, begin, end, c.max_n);
            std::ostringstream os;
            if (c.format == "text") {
                std::uint64_t idx = begin;
                for (const auto& t : trees) {
                    os << idx++ << ' ' << qtree::canon_code(t).to_string() << " edges";
                    for (const auto& [a, b] : t.edges()) os << ' ' << a << '-' << b;
                    os << '\n';
                }
            } else if (c.format == "csv") {
                os << "# qtree " << Json{{"config", config_header("enumerate", c)}}.dump() << "\n";
                os << "index,n,code,edges\n";
                std::uint64_t idx = begin;
                for (const auto& t : trees) {
                    os << idx++ << ',' << n << ',' << qtree::canon_code(t).to_string() << ',';
                    for (std::size_t e = 0; e < t.edges().size(); ++e) {
                        os << (e ? " " : "") << t.edges()[e].first << '-' << t.edges()[e].second;
                    }
                    os << '\n';
                }
            } else if (c.format == "json") {
                Json j;
                j["header"]["config"] = config_header("enumerate", c);
                j["header"]["config"]["n"] = n;
                j["count"] = trees.size();
                j["trees"] = Json::array();
                std::uint64_t idx = begin;
                for (const auto& t : trees) {
                    Json tj = qtree::io::tree_to_json(t);
                    tj["index"] = idx++;
                    tj["code"] = qtree::canon_code(t).to_string();
                    j["trees"].push_back(tj);
                }
                os << j.dump(2) << "\n";
            } else {
                throw qtree::InputError("field 'format': enumerate supports text, csv or json");
            }
            emit(c, os.str());
            return kExitOk;
        }

        if (*charfn) {
            const auto tf = qtree::io::read_tree_file(tree_path);
            const auto rt = rooted_from(tf, root, "charfn");
            const auto f = qtree::char_fn(rt, {qtree::parse_root_condition(root_cond), mode});
            if (c.format == "text") {
                emit(c, charfn_text(f) + "\n");
            } else {
                emit(c, qtree::io::charfn_to_json(f).dump() + "\n");
            }
            return kExitOk;
        }

        if (*attach_cmd) {
            const auto base = qtree::io::read_tree_file(base_path);
            const auto att = qtree::io::read_tree_file(attached_path);
            const auto rt = rooted_from(att, attached_root, "attach");
            const auto merged = qtree::attach(base.tree, vertex, rt);
            if (c.format == "dot") {
                emit(c, qtree::io::tree_to_dot(merged, vertex));
            } else if (c.format == "text") {
                std::ostringstream os;
                os << "n=" << merged.size() << " code=" << qtree::canon_code(merged).to_string()
                   << " merged_vertex=" << vertex << " degree=" << merged.degree(vertex) << "\n";
                emit(c, os.str());
            } else {
                Json j = qtree::io::tree_to_json(merged, vertex);
                const auto pair_base = qtree::char_pair(qtree::RootedTree(base.tree, vertex), mode);
                const auto pair_att = qtree::char_pair(rt, mode);
                j["charfn"] = qtree::io::charfn_to_json(qtree::attach_char_fn(pair_base, pair_att));
                emit(c, j.dump() + "\n");
            }
            return kExitOk;
        }

        if (*cospec) {
            const auto fa = charfn_from_file(a_path, mode);
            const auto fb = charfn_from_file(b_path, mode);
            const bool same = qtree::cospectral(fa, fb);
            if (c.format == "text") {
                emit(c, std::string(same ? "cospectral" : "not cospectral") + "\n  a: " + charfn_text(fa) +
                            "\n  b: " + charfn_text(fb) + "\n");
            } else {
                Json j;
                j["cospectral"] = same;
                j["a"] = qtree::io::charfn_to_json(fa);
                j["b"] = qtree::io::charfn_to_json(fb);
                emit(c, j.dump() + "\n");
            }
            return kExitOk;
        }

        if (*pairs) {
            return finish_report("search-pairs", c, qtree::search::find_cospectral_pairs(n, search_options(c)));
        }

        if (*equal_m) {
            auto opts = search_options(c);
            opts.include_pendant_roots = include_pendant_roots;
            if (!tree_path.empty()) {
                const auto tf = qtree::io::read_tree_file(tree_path);
                return finish_report("search-equal-m", c, qtree::search::find_equal_m_vertex_pairs(tf.tree, opts));
            }
            if (n == 0) throw qtree::InputError("search-equal-m: give --n or --tree");
            return finish_report("search-equal-m", c, qtree::search::find_equal_m_vertex_pairs(n, opts));
        }

        if (*verify) {
            std::vector<qtree::RootedTree> family = qtree::search::default_attach_family();
            if (!family_path.empty()) {
                std::ifstream in(family_path);
                if (!in) throw qtree::InputError("cannot open family file '" + family_path + "'");
                Json j;
                try {
                    j = Json::parse(in);
                } catch (const nlohmann::json::parse_error& e) {
                    throw qtree::InputError("family file: " + std::string(e.what()));
                }
                if (!j.is_array()) throw qtree::InputError("family file: expected an array of rooted trees");
                family.clear();
                for (std::size_t i = 0; i < j.size(); ++i) {
                    const auto tf = qtree::io::tree_from_json(j[i]);
                    if (!tf.root) throw qtree::InputError("family[" + std::to_string(i) + "].root: required");
                    family.emplace_back(tf.tree, *tf.root);
                }
            }
            return finish_report("verify", c, qtree::search::verify_theorems(n_max, family, search_options(c)));
        }

        if (*remark) {
            auto opts = search_options(c);
            opts.include_pendant_roots = include_pendant_roots;
            if (!tree_path.empty()) {
                const auto tf = qtree::io::read_tree_file(tree_path);
                return finish_report("remark35", c, qtree::search::find_remark35_witnesses(tf.tree, opts));
            }
            if (n_max == 0) throw qtree::InputError("remark35: give --n-max or --tree");
            return finish_report("remark35", c, qtree::search::find_remark35_witnesses(n_max, opts));
        }

        if (*spectrum) {
            qtree::CharFn f;
            if (!charfn_path.empty()) {
                f = charfn_from_file(charfn_path, mode);
            } else if (!tree_path.empty()) {
                const auto tf = qtree::io::read_tree_file(tree_path);
                f = qtree::char_fn(rooted_from(tf, root, "spectrum"), {qtree::parse_root_condition(root_cond), mode});
            } else {
                throw qtree::InputError("spectrum: give --tree or --charfn");
            }
            const auto spec = qtree::numerics::spectrum_from_charfn(f, k);
            std::ostringstream os;
            os << std::setprecision(15);
            os << "index,lambda,multiplicity,source\n";
            for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
                const auto& e = spec.eigenvalues[i];
                os << i << ',' << e.lambda << ',' << e.multiplicity << ',' << qtree::numerics::to_string(e.source)
                   << '\n';
            }
            emit(c, os.str());
            return kExitOk;
        }

        if (*dot) {
            const auto tf = qtree::io::read_tree_file(tree_path);
            std::optional<qtree::Vertex> r = tf.root;
            if (root >= 0) r = root;
            if (r && !tf.tree.contains(*r)) throw qtree::InputError("field 'root': vertex out of range");
            const std::string text = qtree::io::tree_to_dot(tf.tree, r);
            if (c.out.empty()) {
                std::cout << text;
                return kExitOk;
            }
            emit(c, text);
            std::filesystem::path sidecar(c.out);
            sidecar.replace_extension(".json");
            Common side = c;
            side.out = sidecar.string();
            emit(side, qtree::io::tree_to_json(tf.tree, r).dump() + "\n");
            return kExitOk;
        }

        if (*fixtures) {
            const auto checks = qtree::fixtures::run_fixtures();
            bool all = true;
            std::ostringstream os;
            for (const auto& ch : checks) {
                all = all && ch.passed;
                os << (ch.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(34) << ch.name << ch.detail << "\n";
            }
            os << (all ? "all fixtures passed" : "FIXTURE FAILURES") << "\n";
            emit(c, os.str());
            return all ? kExitOk : kExitViolation;
        }
    } catch (const qtree::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}
