#include "qtree/report.hpp"

#include <sstream>

namespace qtree::report {
namespace {

io::Json tree_ref_json(const search::TreeRef& t) {
    io::Json j;
    j["n"] = t.n;
    j["index"] = t.index;
    j["code"] = t.code;
    io::Json edges = io::Json::array();
    for (const auto& [a, b] : t.edges) edges.push_back(io::Json::array({a, b}));
    j["edges"] = edges;
    return j;
}

io::Json pair_json(const CharPair& p) {
    io::Json j;
    j["neumann"] = io::charfn_to_json(p.neumann);
    j["dirichlet"] = io::charfn_to_json(p.dirichlet);
    return j;
}

}  // namespace

std::string charfn_cell(const CharFn& f) {
    std::ostringstream os;
    os << f.s_exp << "|";
    bool first = true;
    for (const auto& c : f.poly.coeffs()) {
        if (!first) os << ' ';
        first = false;
        os << c.get_str();
    }
    return os.str();
}

io::Json to_json(const search::SearchReport& r) {
    io::Json j;
    j["header"]["tool"] = "qtree";
    j["header"]["complete"] = r.complete;
    j["header"]["config"] = r.config;
    j["mode"] = search::to_string(r.mode);
    j["stats"] = io::Json::object();
    for (const auto& [k, v] : r.stats) j["stats"][k] = v;
    if (r.mode == search::Mode::CospectralPairs) {
        io::Json groups = io::Json::array();
        for (const auto& g : r.groups) {
            io::Json gj;
            gj["n"] = g.n;
            gj["key"] = io::charfn_to_json(g.key);
            io::Json members = io::Json::array();
            for (const auto& m : g.members) members.push_back(tree_ref_json(m));
            gj["members"] = members;
            groups.push_back(gj);
        }
        j["groups"] = groups;
    } else {
        io::Json pairs = io::Json::array();
        for (const auto& p : r.pairs) {
            io::Json pj;
            pj["tree"] = tree_ref_json(p.tree);
            pj["v1"] = p.v1;
            pj["v2"] = p.v2;
            pj["d1"] = p.d1;
            pj["d2"] = p.d2;
            pj["pair1"] = pair_json(p.pair1);
            pj["pair2"] = pair_json(p.pair2);
            pj["attached_p2_1"] = io::charfn_to_json(p.attached1);
            pj["attached_p2_2"] = io::charfn_to_json(p.attached2);
            if (p.constant) pj["constant"] = p.constant->get_str();
            pairs.push_back(pj);
        }
        j["pairs"] = pairs;
    }
    io::Json viol = io::Json::array();
    for (const auto& v : r.violations) {
        io::Json vj;
        vj["tree"] = tree_ref_json(v.tree);
        vj["v1"] = v.v1;
        vj["v2"] = v.v2;
        vj["kind"] = v.kind;
        vj["detail"] = v.detail;
        viol.push_back(vj);
    }
    j["violations"] = viol;
    return j;
}

std::string to_csv(const search::SearchReport& r, bool with_header) {
    std::ostringstream os;
    if (with_header) {
        io::Json h;
        h["complete"] = r.complete;
        h["config"] = r.config;
        os << "# qtree " << h.dump() << "\n";
        os << "record,n,index,code,group,v1,v2,d1,d2,neumann1,dirichlet1,neumann2,dirichlet2,attached1,attached2,"
              "constant,detail\n";
    }
    std::size_t gi = 0;
    for (const auto& g : r.groups) {
        for (const auto& m : g.members) {
            os << "group-member," << m.n << ',' << m.index << ',' << m.code << ',' << gi << ",,,,,"
               << charfn_cell(g.key) << ",,,,,,,\n";
        }
        ++gi;
    }
    for (const auto& p : r.pairs) {
        os << "pair," << p.tree.n << ',' << p.tree.index << ',' << p.tree.code << ",," << p.v1 << ',' << p.v2 << ','
           << p.d1 << ',' << p.d2 << ',' << charfn_cell(p.pair1.neumann) << ',' << charfn_cell(p.pair1.dirichlet)
           << ',' << charfn_cell(p.pair2.neumann) << ',' << charfn_cell(p.pair2.dirichlet) << ','
           << charfn_cell(p.attached1) << ',' << charfn_cell(p.attached2) << ','
           << (p.constant ? p.constant->get_str() : "") << ",\n";
    }
    for (const auto& v : r.violations) {
        os << "violation," << v.tree.n << ',' << v.tree.index << ',' << v.tree.code << ",," << v.v1 << ',' << v.v2
           << ",,,,,,,,,," << '"' << v.kind << ": " << v.detail << '"' << "\n";
    }
    return os.str();
}

std::string to_text(const search::SearchReport& r) {
    std::ostringstream os;
    os << search::to_string(r.mode) << " n=[" << r.n_min << "," << r.n_max << "] pendants=" << to_string(r.pendant_mode)
       << (r.complete ? "" : " (INCOMPLETE)") << "\n";
    for (const auto& [k, v] : r.stats) os << "  " << k << ": " << v << "\n";
    std::size_t gi = 0;
    for (const auto& g : r.groups) {
        os << "group " << gi++ << "  s^" << g.key.s_exp << " * (" << g.key.poly.to_string() << ")\n";
        for (const auto& m : g.members) os << "  tree #" << m.index << " " << m.code << "\n";
    }
    for (const auto& p : r.pairs) {
        os << "tree #" << p.tree.index << " " << p.tree.code << "  v1=" << p.v1 << " v2=" << p.v2 << " d=(" << p.d1
           << "," << p.d2 << ")";
        if (p.constant) os << " C=" << p.constant->get_str();
        os << "\n    D(v1): s^" << p.pair1.dirichlet.s_exp << " * (" << p.pair1.dirichlet.poly.to_string() << ")"
           << "\n    D(v2): s^" << p.pair2.dirichlet.s_exp << " * (" << p.pair2.dirichlet.poly.to_string() << ")\n";
    }
    for (const auto& v : r.violations) {
        os << "VIOLATION " << v.kind << " tree #" << v.tree.index << " " << v.tree.code << " (" << v.v1 << "," << v.v2
           << "): " << v.detail << "\n";
    }
    return os.str();
}

}  // namespace qtree::report
