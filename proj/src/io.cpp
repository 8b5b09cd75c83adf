#include "brion/io.hpp"

#include <limits>

namespace brion {

namespace {

Rat coordinate_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) {
            return Rat(Int(std::to_string(j.get<std::uint64_t>())));
        }
        return Rat(Int(std::to_string(j.get<std::int64_t>())));
    }
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const UsageError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    throw InputError(where + ": expected an integer or a \"p/q\" string, got " + j.dump());
}

} // namespace

Polytope polytope_from_json(const Json& doc) {
    if (!doc.is_object()) {
        throw InputError("document: expected a JSON object");
    }
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
        throw InputError("document.dimension: expected an integer");
    }
    const auto n = doc["dimension"].get<std::int64_t>();
    if (n < 1 || n > 6) {
        throw InputError("document.dimension: must be between 1 and 6, got " + std::to_string(n));
    }
    if (!doc.contains("vertices") || !doc["vertices"].is_array() || doc["vertices"].empty()) {
        throw InputError("document.vertices: expected a non-empty array");
    }
    std::vector<RatVector> pts;
    const auto& vs = doc["vertices"];
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string where = "document.vertices[" + std::to_string(i) + "]";
        if (!vs[i].is_array() || vs[i].size() != static_cast<std::size_t>(n)) {
            throw InputError(where + ": expected an array of " + std::to_string(n) +
                             " coordinates");
        }
        RatVector p;
        for (std::size_t c = 0; c < vs[i].size(); ++c) {
            p.push_back(coordinate_from_json(vs[i][c], where + "[" + std::to_string(c) + "]"));
        }
        pts.push_back(std::move(p));
    }
    return Polytope::hull(pts);
}

Polytope polytope_from_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("document: ") + e.what());
    }
    return polytope_from_json(doc);
}

Json to_json(const Int& z) {
    if (z.fits_slong_p()) {
        return Json(static_cast<std::int64_t>(z.get_si()));
    }
    return Json(z.get_str());
}

Json to_json(const Rat& r) { return Json(to_string(r)); }

Json to_json(std::span<const Int> v) {
    Json out = Json::array();
    for (const auto& z : v) {
        out.push_back(to_json(z));
    }
    return out;
}

Json to_json(std::span<const Rat> v) {
    Json out = Json::array();
    for (const auto& r : v) {
        out.push_back(to_json(r));
    }
    return out;
}

Json polytope_to_json(const Polytope& p) {
    Json vs = Json::array();
    for (const auto& v : p.vertices()) {
        Json row = Json::array();
        for (const auto& x : v) {
            row.push_back(x.get_den() == 1 ? to_json(Int(x.get_num())) : to_json(x));
        }
        vs.push_back(std::move(row));
    }
    return Json{{"dimension", p.dim()}, {"vertices", std::move(vs)}};
}

Json faces_report(const Polytope& p) {
    Json facets = Json::array();
    for (const auto& f : p.facets()) {
        facets.push_back({{"normal", to_json(f.normal)},
                          {"offset", to_json(f.offset)},
                          {"vertices", f.vertices}});
    }
    Json faces = Json::array();
    for (std::size_t i = 0; i < p.faces().size(); ++i) {
        const auto& f = p.face(i);
        faces.push_back({{"index", i},
                         {"dim", f.dim},
                         {"vertices", f.vertices},
                         {"facets", f.facets},
                         {"representative", to_json(p.representative_point(i))}});
    }
    Json vertices = Json::array();
    for (const auto& v : p.vertices()) {
        vertices.push_back(to_json(v));
    }
    std::vector<std::size_t> all(p.faces().size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    return Json{{"dimension", p.dim()},
                {"vertices", std::move(vertices)},
                {"facets", std::move(facets)},
                {"faces", std::move(faces)},
                {"euler_characteristic", euler_char(p, all)}};
}

Json subset_report(const FaceSubset& s) {
    return Json{{"faces", s.members}, {"euler_characteristic", euler_char(s)}};
}

Json gram_report(const GramReport& r) {
    Json mism = Json::array();
    for (const auto& m : r.mismatches) {
        mism.push_back({{"point", to_json(m.point)}, {"lhs", to_json(m.lhs)}, {"rhs", to_json(m.rhs)}});
    }
    return Json{{"variant", std::string(to_string(r.variant))},
                {"box", to_string(r.box)},
                {"ok", r.ok},
                {"mismatches", std::move(mism)}};
}

Json brion_report(const BrionReport& r) {
    Json fails = Json::array();
    for (const auto& f : r.failures) {
        fails.push_back({{"point", to_json(f.point)}, {"lhs", to_json(f.lhs)}, {"rhs", to_json(f.rhs)}});
    }
    return Json{{"variant", std::string(to_string(r.variant))},
                {"trials", r.trials},
                {"seed", r.seed},
                {"ok", r.ok},
                {"failures", std::move(fails)}};
}

Json decomposition_report(const VertexConeDecomposition& d) {
    Json rays = Json::array();
    for (const auto& r : d.rays) {
        rays.push_back(to_json(r));
    }
    Json cells = Json::array();
    for (std::size_t c = 0; c < d.half_open.size(); ++c) {
        const auto& cell = d.half_open[c];
        Json gens = Json::array();
        for (const auto& g : cell.generators) {
            gens.push_back(to_json(g));
        }
        Json num = Json::array();
        for (const auto& pt : d.rep.terms[c].numerator) {
            num.push_back(to_json(pt));
        }
        cells.push_back({{"rays", d.cells[c]},
                         {"generators", std::move(gens)},
                         {"open_mask", cell.open_mask},
                         {"numerator", std::move(num)}});
    }
    return Json{{"mode", std::string(to_string(d.mode))},
                {"shift", to_json(d.shift)},
                {"rays", std::move(rays)},
                {"xi", to_json(d.xi)},
                {"cells", std::move(cells)}};
}

} // namespace brion
