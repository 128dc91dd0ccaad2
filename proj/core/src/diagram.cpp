#include "coxjsj/diagram.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "coxjsj/errors.hpp"

namespace coxjsj {

CoxeterDiagram::CoxeterDiagram(std::vector<std::string> generator_names)
    : names_(std::move(generator_names)), adjacency_(names_.size()) {
    if (names_.empty()) {
        throw InputError("a diagram needs at least one generator");
    }
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (names_[static_cast<std::size_t>(i)].empty()) {
            throw InputError("generator names must be nonempty");
        }
        auto [it, inserted] = index_by_name_.emplace(names_[static_cast<std::size_t>(i)], i);
        if (!inserted) {
            throw InputError("duplicate generator name '" + names_[static_cast<std::size_t>(i)] +
                             "'");
        }
    }
}

void CoxeterDiagram::add_edge(int s, int t, int m) {
    if (s < 0 || s >= generator_count() || t < 0 || t >= generator_count()) {
        throw InputError("edge endpoint out of range");
    }
    if (s == t) {
        throw InputError("edge endpoints must be distinct generators");
    }
    if (m < 2) {
        throw InputError("edge label must be an integer >= 2, got " + std::to_string(m));
    }
    std::pair<int, int> key = std::minmax(s, t);
    auto it = labels_.find(key);
    if (it != labels_.end()) {
        if (it->second != m) {
            throw InputError("conflicting labels for pair (" + name(s) + ", " + name(t) + "): " +
                             std::to_string(it->second) + " vs " + std::to_string(m));
        }
        return;
    }
    labels_.emplace(key, m);
    auto& as = adjacency_[static_cast<std::size_t>(s)];
    auto& at = adjacency_[static_cast<std::size_t>(t)];
    as.insert(std::upper_bound(as.begin(), as.end(), t), t);
    at.insert(std::upper_bound(at.begin(), at.end(), s), s);
}

void CoxeterDiagram::add_edge(const std::string& s, const std::string& t, int m) {
    add_edge(index_of(s), index_of(t), m);
}

int CoxeterDiagram::index_of(const std::string& name) const {
    auto it = index_by_name_.find(name);
    if (it == index_by_name_.end()) {
        throw InputError("unknown generator '" + name + "'");
    }
    return it->second;
}

bool CoxeterDiagram::has_generator(const std::string& name) const {
    return index_by_name_.count(name) != 0;
}

std::optional<int> CoxeterDiagram::label(int s, int t) const {
    auto it = labels_.find(std::pair<int, int>(std::minmax(s, t)));
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

const std::vector<int>& CoxeterDiagram::neighbors(int g) const {
    return adjacency_.at(static_cast<std::size_t>(g));
}

std::vector<std::tuple<int, int, int>> CoxeterDiagram::edges() const {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(labels_.size());
    for (const auto& [key, m] : labels_) out.emplace_back(key.first, key.second, m);
    return out;
}

GeneratorSubset CoxeterDiagram::all_generators() const {
    std::vector<int> all(static_cast<std::size_t>(generator_count()));
    for (int i = 0; i < generator_count(); ++i) all[static_cast<std::size_t>(i)] = i;
    return GeneratorSubset::of(std::move(all));
}

GeneratorSubset CoxeterDiagram::subset_of_names(const std::vector<std::string>& names) const {
    std::vector<int> indices;
    indices.reserve(names.size());
    for (const auto& n : names) indices.push_back(index_of(n));
    return GeneratorSubset::of(std::move(indices));
}

std::vector<std::string> CoxeterDiagram::names_of(const GeneratorSubset& subset) const {
    std::vector<std::string> out;
    out.reserve(subset.size());
    for (int g : subset) out.push_back(name(g));
    return out;
}

std::string CoxeterDiagram::format_subset(const GeneratorSubset& subset) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int g : subset) {
        if (!first) os << ", ";
        os << name(g);
        first = false;
    }
    os << '}';
    return os.str();
}

CoxeterDiagram induced_subdiagram(const CoxeterDiagram& d, const GeneratorSubset& subset) {
    CoxeterDiagram out(d.names_of(subset));
    const auto& idx = subset.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (auto m = d.label(idx[i], idx[j])) {
                out.add_edge(static_cast<int>(i), static_cast<int>(j), *m);
            }
        }
    }
    return out;
}

std::vector<GeneratorSubset> components(const CoxeterDiagram& d, const GeneratorSubset& subset) {
    std::vector<GeneratorSubset> out;
    std::vector<char> seen(static_cast<std::size_t>(d.generator_count()), 0);
    for (int start : subset) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> comp;
        std::deque<int> queue{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!queue.empty()) {
            int g = queue.front();
            queue.pop_front();
            comp.push_back(g);
            for (int h : d.neighbors(g)) {
                if (!seen[static_cast<std::size_t>(h)] && subset.contains(h)) {
                    seen[static_cast<std::size_t>(h)] = 1;
                    queue.push_back(h);
                }
            }
        }
        out.push_back(GeneratorSubset::of(std::move(comp)));
    }
    // Iterating `subset` ascending already yields components ordered by
    // smallest member.
    return out;
}

std::vector<GeneratorSubset> components_minus(const CoxeterDiagram& d,
                                              const GeneratorSubset& removed) {
    return components(d, d.all_generators().minus(removed));
}

bool separates(const CoxeterDiagram& d, const GeneratorSubset& a, const GeneratorSubset& b) {
    GeneratorSubset rest = b.minus(a);
    if (rest.size() < 2) return false;
    auto comps = components_minus(d, a);
    int touched = 0;
    for (const auto& comp : comps) {
        if (!comp.intersected(rest).empty()) {
            if (++touched >= 2) return true;
        }
    }
    return false;
}

}  // namespace coxjsj
