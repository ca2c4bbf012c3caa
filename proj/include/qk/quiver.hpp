#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qk/rational.hpp"

namespace qk {

// Finite quiver with opaque string ids for vertices and arrows.
struct Quiver {
    std::vector<std::string> vertices;
    struct Arrow {
        std::string id;
        int src = -1, tgt = -1; // vertex indices
    };
    std::vector<Arrow> arrows;

    std::map<std::string, int> vindex;
    std::map<std::string, int> aindex;

    int add_vertex(const std::string& id) {
        if (vindex.count(id)) throw std::invalid_argument("duplicate vertex id " + id);
        vindex[id] = int(vertices.size());
        vertices.push_back(id);
        return int(vertices.size()) - 1;
    }
    int add_arrow(const std::string& id, const std::string& s, const std::string& t) {
        if (aindex.count(id)) throw std::invalid_argument("duplicate arrow id " + id);
        if (!vindex.count(s) || !vindex.count(t))
            throw std::invalid_argument("arrow " + id + " references undeclared vertex");
        aindex[id] = int(arrows.size());
        arrows.push_back({id, vindex.at(s), vindex.at(t)});
        return int(arrows.size()) - 1;
    }
    int nv() const { return int(vertices.size()); }
    int na() const { return int(arrows.size()); }
    int vid(const std::string& id) const {
        auto it = vindex.find(id);
        if (it == vindex.end()) throw std::invalid_argument("unknown vertex " + id);
        return it->second;
    }
    int aid(const std::string& id) const {
        auto it = aindex.find(id);
        if (it == aindex.end()) throw std::invalid_argument("unknown arrow " + id);
        return it->second;
    }
    bool acyclic() const; // no oriented cycles

    Quiver opposite() const {
        Quiver q;
        for (auto& v : vertices) q.add_vertex(v);
        for (auto& a : arrows) q.add_arrow(a.id, vertices[a.tgt], vertices[a.src]);
        return q;
    }
};

// A path is a sequence of arrow indices in traversal order (first arrow
// traversed first); a trivial path carries only its vertex.
struct Path {
    int base = -1;           // vertex index, used when arrows is empty
    std::vector<int> arrows; // arrow indices

    static Path trivial(int v) {
        Path p;
        p.base = v;
        return p;
    }
    bool is_trivial() const { return arrows.empty(); }
    int length() const { return int(arrows.size()); }
    int source(const Quiver& q) const { return arrows.empty() ? base : q.arrows[arrows.front()].src; }
    int target(const Quiver& q) const { return arrows.empty() ? base : q.arrows[arrows.back()].tgt; }
    bool valid(const Quiver& q) const {
        for (size_t i = 0; i + 1 < arrows.size(); ++i)
            if (q.arrows[arrows[i]].tgt != q.arrows[arrows[i + 1]].src) return false;
        return arrows.empty() ? base >= 0 : true;
    }
    // p followed by r (traversal order concatenation)
    Path then(const Path& r, const Quiver& q) const {
        if (!arrows.empty() && !r.arrows.empty() && target(q) != r.source(q))
            throw std::invalid_argument("paths do not compose");
        Path out;
        out.base = arrows.empty() ? base : -1;
        if (arrows.empty()) out.base = base;
        out.arrows = arrows;
        out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
        if (out.arrows.empty()) out.base = base;
        return out;
    }
    std::string str(const Quiver& q) const {
        if (arrows.empty()) return "e(" + q.vertices[base] + ")";
        std::string s;
        for (size_t i = 0; i < arrows.size(); ++i) {
            if (i) s += " ";
            s += q.arrows[arrows[i]].id;
        }
        return s;
    }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        if (a.arrows != b.arrows) return a.arrows < b.arrows;
        return a.base < b.base;
    }
    friend bool operator==(const Path& a, const Path& b) {
        return a.arrows == b.arrows && (!a.arrows.empty() || a.base == b.base);
    }
};

// K-linear relation: a combination of parallel paths of length >= 2.
struct Relation {
    std::vector<std::pair<Rat, Path>> terms;

    void check(const Quiver& q) const {
        if (terms.empty()) throw std::invalid_argument("empty relation");
        bool nonzero = false;
        int s = terms[0].second.source(q), t = terms[0].second.target(q);
        for (auto& [c, p] : terms) {
            if (!p.valid(q)) throw std::invalid_argument("relation contains invalid path");
            if (p.length() < 2) throw std::invalid_argument("relation path of length < 2");
            if (p.source(q) != s || p.target(q) != t)
                throw std::invalid_argument("relation terms not parallel");
            if (!c.is_zero()) nonzero = true;
        }
        if (!nonzero) throw std::invalid_argument("relation has no nonzero coefficient");
    }
    std::string str(const Quiver& q) const {
        std::string s;
        for (size_t i = 0; i < terms.size(); ++i) {
            if (i) s += " + ";
            s += terms[i].first.str() + "*(" + terms[i].second.str(q) + ")";
        }
        return s;
    }
};

// Dimension vector over a quiver's vertex set.
struct DimVec {
    std::vector<int> d;

    DimVec() = default;
    explicit DimVec(int n) : d(n, 0) {}
    int& operator[](int i) { return d[i]; }
    int operator[](int i) const { return d[i]; }
    int size() const { return int(d.size()); }
    int total() const {
        int s = 0;
        for (int x : d) s += x;
        return s;
    }
    friend DimVec operator+(const DimVec& a, const DimVec& b) {
        DimVec c(int(a.d.size()));
        for (size_t i = 0; i < a.d.size(); ++i) c.d[i] = a.d[i] + b.d[i];
        return c;
    }
    friend bool operator==(const DimVec& a, const DimVec& b) { return a.d == b.d; }
    friend bool operator<(const DimVec& a, const DimVec& b) { return a.d < b.d; }
    std::string str(const Quiver& q) const {
        std::string s = "(";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ",";
            s += q.vertices[i] + "=" + std::to_string(d[i]);
        }
        return s + ")";
    }
};

inline bool Quiver::acyclic() const {
    std::vector<int> state(nv(), 0);
    std::vector<std::vector<int>> out(nv());
    for (auto& a : arrows) out[a.src].push_back(a.tgt);
    // iterative DFS with colors
    for (int s = 0; s < nv(); ++s) {
        if (state[s]) continue;
        std::vector<std::pair<int, size_t>> stack{{s, 0}};
        state[s] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < out[v].size()) {
                int w = out[v][i++];
                if (state[w] == 1) return false;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

} // namespace qk
