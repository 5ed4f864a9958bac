#include "boxres/complex_json.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

#include "boxres/resolution.hpp"

namespace boxres {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json exponents_json(const Monomial& m) {
    return ordered_json(m.exponents());
}

Monomial monomial_from_json(const ordered_json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n) {
        throw std::invalid_argument("complex file: bad exponent array");
    }
    std::vector<int> e;
    e.reserve(n);
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw std::invalid_argument("complex file: non-integer exponent");
        }
        e.push_back(v.get<int>());
    }
    return Monomial(std::move(e));
}

}  // namespace

std::string complex_to_json(const LabelledComplex& x, bool with_differentials) {
    // Canonical face order: dimension, then id string.
    std::vector<const Face*> order;
    order.reserve(x.faces().size());
    for (const auto& [key, f] : x.faces()) order.push_back(&f);
    std::sort(order.begin(), order.end(), [](const Face* a, const Face* b) {
        return std::make_pair(a->dim, face_id(a->key)) <
               std::make_pair(b->dim, face_id(b->key));
    });

    ordered_json root;
    root["n"] = x.n();
    root["variant"] = x.variant();
    ordered_json faces = ordered_json::array();
    for (const Face* f : order) {
        ordered_json jf;
        jf["id"] = face_id(f->key);
        jf["dim"] = f->dim;
        ordered_json verts = ordered_json::array();
        for (const Monomial& v : f->key) verts.push_back(exponents_json(v));
        jf["vertices"] = std::move(verts);
        jf["label"] = exponents_json(f->label);
        std::vector<std::pair<std::string, int>> bnd;
        bnd.reserve(f->boundary.size());
        for (const BoundaryEntry& b : f->boundary) {
            bnd.emplace_back(face_id(b.facet), b.sign);
        }
        std::sort(bnd.begin(), bnd.end());
        ordered_json jb = ordered_json::array();
        for (const auto& [id, sign] : bnd) {
            ordered_json e;
            e["id"] = id;
            e["sign"] = sign;
            jb.push_back(std::move(e));
        }
        jf["boundary"] = std::move(jb);
        faces.push_back(std::move(jf));
    }
    root["faces"] = std::move(faces);

    if (with_differentials) {
        const FreeComplex fc = free_complex(x);
        ordered_json diffs = ordered_json::array();
        for (std::size_t p = 1; p < fc.diff.size(); ++p) {
            ordered_json jd;
            jd["p"] = static_cast<int>(p);
            jd["rows"] = static_cast<int>(fc.basis[p - 1].size());
            jd["cols"] = static_cast<int>(fc.basis[p].size());
            ordered_json entries = ordered_json::array();
            for (const DifferentialEntry& e : fc.diff[p]) {
                ordered_json je;
                je["row"] = e.row;
                je["col"] = e.col;
                je["sign"] = e.sign;
                je["quotient"] = exponents_json(e.quotient);
                entries.push_back(std::move(je));
            }
            jd["entries"] = std::move(entries);
            diffs.push_back(std::move(jd));
        }
        root["differentials"] = std::move(diffs);
    }
    return root.dump(2) + "\n";
}

LabelledComplex complex_from_json(const std::string& text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("complex file: JSON parse error: ") + e.what());
    }
    if (!root.is_object() || !root.contains("n") || !root.contains("variant") ||
        !root.contains("faces") || !root["faces"].is_array()) {
        throw std::invalid_argument("complex file: missing n/variant/faces");
    }
    if (!root["n"].is_number_integer()) {
        throw std::invalid_argument("complex file: n must be an integer");
    }
    const int n = root["n"].get<int>();
    if (n < 2) throw std::invalid_argument("complex file: need n >= 2");

    LabelledComplex out;
    out.n_ = n;
    out.variant_ = root["variant"].is_string() ? root["variant"].get<std::string>()
                                               : throw std::invalid_argument(
                                                     "complex file: variant must be a string");

    // First pass: vertices and keys.
    std::map<std::string, FaceKey> key_of_id;
    for (const auto& jf : root["faces"]) {
        if (!jf.is_object() || !jf.contains("id") || !jf.contains("dim") ||
            !jf.contains("vertices") || !jf.contains("label") || !jf.contains("boundary")) {
            throw std::invalid_argument("complex file: malformed face object");
        }
        FaceKey key;
        for (const auto& jv : jf["vertices"]) {
            key.push_back(monomial_from_json(jv, n));
        }
        if (key.empty()) throw std::invalid_argument("complex file: face without vertices");
        if (!std::is_sorted(key.begin(), key.end()) ||
            std::adjacent_find(key.begin(), key.end()) != key.end()) {
            throw std::invalid_argument("complex file: vertices not sorted and distinct in " +
                                        jf["id"].get<std::string>());
        }
        const std::string id = jf["id"].get<std::string>();
        if (face_id(key) != id) {
            throw std::invalid_argument("complex file: id does not match vertices: " + id);
        }
        if (!key_of_id.emplace(id, key).second) {
            throw std::invalid_argument("complex file: duplicate face id " + id);
        }
    }

    // Second pass: assemble faces with resolved boundary references.
    for (const auto& jf : root["faces"]) {
        const std::string id = jf["id"].get<std::string>();
        Face f;
        f.key = key_of_id.at(id);
        if (!jf["dim"].is_number_integer()) {
            throw std::invalid_argument("complex file: dim must be an integer in " + id);
        }
        f.dim = jf["dim"].get<int>();
        f.label = monomial_from_json(jf["label"], n);
        for (const auto& jb : jf["boundary"]) {
            if (!jb.is_object() || !jb.contains("id") || !jb.contains("sign")) {
                throw std::invalid_argument("complex file: malformed boundary entry in " + id);
            }
            const std::string fid = jb["id"].get<std::string>();
            auto it = key_of_id.find(fid);
            if (it == key_of_id.end()) {
                throw std::invalid_argument("complex file: unknown facet id " + fid +
                                            " in " + id);
            }
            const int sign = jb["sign"].get<int>();
            if (sign != 1 && sign != -1) {
                throw std::invalid_argument("complex file: sign must be +-1 in " + id);
            }
            f.boundary.push_back({it->second, sign});
        }
        std::sort(f.boundary.begin(), f.boundary.end(),
                  [](const BoundaryEntry& a, const BoundaryEntry& b) {
                      return a.facet < b.facet;
                  });
        if (!out.faces_.emplace(f.key, std::move(f)).second) {
            throw std::invalid_argument("complex file: duplicate face " + id);
        }
    }

    // Structural validation; mathematical validation (d^2, acyclicity) is
    // deliberately left to the caller.
    try {
        out.check_closure();
        out.check_geometry();
    } catch (const std::logic_error& e) {
        throw std::invalid_argument(std::string("complex file: ") + e.what());
    }
    return out;
}

}  // namespace boxres
