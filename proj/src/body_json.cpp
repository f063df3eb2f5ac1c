#include "cvx/body_json.hpp"

#include <json.hpp>

namespace cvx {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw std::invalid_argument("parse_body: field '" + field + "' " + why);
}

std::vector<Vector> parse_matrix(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) fail(field, "must be a nonempty array of arrays");
    std::vector<Vector> rows;
    std::size_t width = 0;
    for (const auto& r : j) {
        if (!r.is_array() || r.empty()) fail(field, "must contain nonempty numeric rows");
        Vector row;
        for (const auto& v : r) {
            if (!v.is_number()) fail(field, "must be numeric");
            row.push_back(v.get<double>());
        }
        if (width == 0) width = row.size();
        if (row.size() != width) fail(field, "has ragged rows");
        rows.push_back(std::move(row));
    }
    return rows;
}

Vector parse_vector(const json& j, const std::string& field) {
    if (!j.is_array()) fail(field, "must be a numeric array");
    Vector v;
    for (const auto& x : j) {
        if (!x.is_number()) fail(field, "must be numeric");
        v.push_back(x.get<double>());
    }
    return v;
}

HRep parse_hrep_fields(const json& j) {
    HRep h;
    const auto rows = parse_matrix(j.at("rows"), "rows");
    const Vector rhs = parse_vector(j.at("rhs"), "rhs");
    if (rows.size() != rhs.size()) fail("rhs", "length must match rows");
    for (std::size_t i = 0; i < rows.size(); ++i) h.ineq.push_back(LinearRow{rows[i], rhs[i]});
    if (j.contains("eq_rows")) {
        const auto erows = parse_matrix(j.at("eq_rows"), "eq_rows");
        const Vector erhs = parse_vector(j.at("eq_rhs"), "eq_rhs");
        if (erows.size() != erhs.size()) fail("eq_rhs", "length must match eq_rows");
        for (std::size_t i = 0; i < erows.size(); ++i)
            h.eq.push_back(LinearRow{erows[i], erhs[i]});
    }
    return h;
}

Body parse_zoo(const json& j) {
    const std::string name = j.at("zoo").get<std::string>();
    auto geti = [&](const std::string& f) {
        if (!j.contains(f) || !j.at(f).is_number_integer()) fail(f, "required integer");
        return j.at(f).get<long>();
    };
    if (name == "cube") {
        const long d = geti("d");
        if (d < 1) fail("d", "must be >= 1");
        if (j.value("rep", "hrep") == std::string("vrep")) return make_cube_vrep(std::size_t(d));
        return make_cube(std::size_t(d));
    }
    if (name == "cross") return make_cross(std::size_t(geti("d")));
    if (name == "simplex") return make_simplex(std::size_t(geti("d")));
    if (name == "ball") {
        const long d = geti("d");
        const double r = j.value("radius", 1.0);
        if (r <= 0.0) fail("radius", "must be positive");
        return make_ball(std::size_t(d), r);
    }
    if (name == "lpball") {
        const long d = geti("d");
        const double p = j.value("p", 2.0);
        if (p == 1.0) return make_cross(std::size_t(d));
        if (p == 2.0) return make_ball(std::size_t(d));
        if (std::isinf(p)) return make_cube(std::size_t(d));
        fail("p", "only p in {1, 2, inf} have exact representations here");
    }
    if (name == "tsp") {
        const long n = geti("n");
        return make_tsp(int(n)).body;
    }
    if (name == "cut") {
        const long n = geti("n");
        VRep v;
        for (const auto& m : make_cut_vertices(int(n))) v.points.push_back(flatten_matrix(m));
        return Body{v, false};
    }
    fail("zoo", "unknown shorthand '" + name + "'");
}

}  // namespace

Body parse_body(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("parse_body: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) fail("<root>", "must be a JSON object");
    if (j.contains("zoo")) return parse_zoo(j);
    if (!j.contains("type")) fail("type", "required (or use a zoo shorthand)");
    const std::string type = j.at("type").get<std::string>();
    const bool symmetric = j.value("symmetric", false);

    if (type == "vrep") {
        VRep v{parse_matrix(j.at("points"), "points")};
        if (v.points.size() <= v.points[0].size())
            fail("points", "too few points for a full-dimensional body (no interior)");
        return Body{v, symmetric};
    }
    if (type == "hrep") {
        return Body{parse_hrep_fields(j), symmetric};
    }
    if (type == "ball") {
        const long d = j.at("d").get<long>();
        const double r = j.value("radius", 1.0);
        if (d < 1) fail("d", "must be >= 1");
        if (r <= 0.0) fail("radius", "must be positive");
        return Body{BallRep{std::size_t(d), r}, true};
    }
    if (type == "ellipsoid") {
        const Vector center = parse_vector(j.at("center"), "center");
        const auto rows = parse_matrix(j.at("form"), "form");
        if (rows.size() != center.size() || rows[0].size() != center.size())
            fail("form", "must be a square matrix matching the center dimension");
        SymMatrix f(center.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t k = i; k < rows.size(); ++k) {
                if (std::fabs(rows[i][k] - rows[k][i]) > 1e-12)
                    fail("form", "must be symmetric");
                f.set(i, k, rows[i][k]);
            }
        if (!is_psd(f, 1e-12)) fail("form", "must be positive semidefinite");
        return Body{Ellipsoid{center, f}, symmetric};
    }
    if (type == "projected") {
        ProjectedRep p;
        p.poly = [&] {
            HPolytope hp;
            const HRep h = parse_hrep_fields(j);
            hp.ineq = h.ineq;
            hp.eq = h.eq;
            hp.dim = j.at("dim").get<std::size_t>();
            for (const auto& r : hp.ineq)
                if (r.coeffs.size() != hp.dim) fail("rows", "width must equal dim");
            for (const auto& r : hp.eq)
                if (r.coeffs.size() != hp.dim) fail("eq_rows", "width must equal dim");
            return hp;
        }();
        const auto maprows = parse_matrix(j.at("map"), "map");
        if (maprows[0].size() != p.poly.dim) fail("map", "width must equal dim");
        p.map = LinearMap::from_rows(maprows);
        return Body{p, symmetric};
    }
    if (type == "sectioned") {
        SectionedRep s;
        s.points = parse_matrix(j.at("points"), "points");
        s.basis = parse_matrix(j.at("basis"), "basis");
        for (const auto& b : s.basis)
            if (b.size() != s.points[0].size()) fail("basis", "vectors must live in the point space");
        return Body{s, symmetric};
    }
    fail("type", "unknown representation '" + type + "'");
}

std::string body_to_json(const Body& b) {
    json j;
    j["symmetric"] = b.symmetric;
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, VRep>) {
                j["type"] = "vrep";
                j["points"] = r.points;
            } else if constexpr (std::is_same_v<T, HRep>) {
                j["type"] = "hrep";
                json rows = json::array(), rhs = json::array();
                for (const auto& row : r.ineq) {
                    rows.push_back(row.coeffs);
                    rhs.push_back(row.rhs);
                }
                j["rows"] = rows;
                j["rhs"] = rhs;
                if (!r.eq.empty()) {
                    json erows = json::array(), erhs = json::array();
                    for (const auto& row : r.eq) {
                        erows.push_back(row.coeffs);
                        erhs.push_back(row.rhs);
                    }
                    j["eq_rows"] = erows;
                    j["eq_rhs"] = erhs;
                }
            } else if constexpr (std::is_same_v<T, BallRep>) {
                j["type"] = "ball";
                j["d"] = r.dim;
                j["radius"] = r.radius;
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                j["type"] = "ellipsoid";
                j["center"] = r.center;
                json form = json::array();
                for (std::size_t i = 0; i < r.form.dim(); ++i) {
                    json row = json::array();
                    for (std::size_t k = 0; k < r.form.dim(); ++k) row.push_back(r.form(i, k));
                    form.push_back(row);
                }
                j["form"] = form;
            } else if constexpr (std::is_same_v<T, ProjectedRep>) {
                j["type"] = "projected";
                j["dim"] = r.poly.dim;
                json rows = json::array(), rhs = json::array();
                for (const auto& row : r.poly.ineq) {
                    rows.push_back(row.coeffs);
                    rhs.push_back(row.rhs);
                }
                j["rows"] = rows;
                j["rhs"] = rhs;
                json erows = json::array(), erhs = json::array();
                for (const auto& row : r.poly.eq) {
                    erows.push_back(row.coeffs);
                    erhs.push_back(row.rhs);
                }
                j["eq_rows"] = erows;
                j["eq_rhs"] = erhs;
                json maprows = json::array();
                for (std::size_t i = 0; i < r.map.rows; ++i) {
                    json row = json::array();
                    for (std::size_t k = 0; k < r.map.cols; ++k) row.push_back(r.map.at(i, k));
                    maprows.push_back(row);
                }
                j["map"] = maprows;
            } else {
                j["type"] = "sectioned";
                j["points"] = r.points;
                j["basis"] = r.basis;
            }
        },
        b.rep);
    return j.dump();
}

}  // namespace cvx
