#include "rx/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "rx/errors.hpp"

namespace rx {

using json = nlohmann::ordered_json;

namespace {

void check_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key())) throw SchemaError(path + "/" + item.key(), "unknown field");
}

const json& require_field(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key)) throw SchemaError(path + "/" + key, "missing required field");
    return obj.at(key);
}

std::string require_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path, "expected string");
    return j.get<std::string>();
}

Rat require_rational(const json& j, const std::string& path) {
    if (!j.is_string())
        throw SchemaError(path, "expected rational string \"p\" or \"p/q\" (numbers are not accepted)");
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const RationalParseError& e) {
        throw RationalParseError(path + ": " + e.what());
    }
}

RatVec require_rat_vec(const json& j, const std::string& path, std::size_t expected_len) {
    if (!j.is_array()) throw SchemaError(path, "expected array of rational strings");
    if (j.size() != expected_len)
        throw SchemaError(path, "expected " + std::to_string(expected_len) + " coordinates, got " +
                                    std::to_string(j.size()));
    RatVec v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(require_rational(j[i], path + "/" + std::to_string(i)));
    return v;
}

std::vector<RatVec> require_vertex_list(const json& j, const std::string& path, std::size_t coord_len) {
    if (!j.is_array()) throw SchemaError(path, "expected array of vertices");
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(require_rat_vec(j[i], path + "/" + std::to_string(i), coord_len));
    return out;
}

json rat_vec_json(const RatVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(x.str());
    return a;
}

json int_vec_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.get_str());
    return a;
}

Int pow10(unsigned long k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

} // namespace

InputDocument parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw JsonSyntaxError(e.what());
    }
    if (!j.is_object()) throw SchemaError("", "expected top-level object");

    InputDocument doc;
    std::string mode = require_string(require_field(j, "", "mode"), "/mode");
    if (mode == "divisorial") {
        doc.mode = InputMode::Divisorial;
        check_keys(j, "", {"mode", "name", "dim", "box", "psi"});
    } else if (mode == "degenerations") {
        doc.mode = InputMode::Degenerations;
        check_keys(j, "", {"mode", "name", "dim", "box", "dh_barycenter", "degenerations"});
    } else {
        throw SchemaError("/mode", "expected \"divisorial\" or \"degenerations\"");
    }

    doc.name = require_string(require_field(j, "", "name"), "/name");

    const json& jdim = require_field(j, "", "dim");
    if (!jdim.is_number_integer() || jdim.get<long>() < 1)
        throw SchemaError("/dim", "expected positive integer");
    doc.dim = jdim.get<int>();

    const json& jbox = require_field(j, "", "box");
    if (!jbox.is_object()) throw SchemaError("/box", "expected object");
    check_keys(jbox, "/box", {"vertices"});
    doc.box_vertices = require_vertex_list(require_field(jbox, "/box", "vertices"), "/box/vertices",
                                           static_cast<std::size_t>(doc.dim));

    if (doc.mode == InputMode::Divisorial) {
        const json& jpsi = require_field(j, "", "psi");
        if (!jpsi.is_array()) throw SchemaError("/psi", "expected array");
        std::set<std::string> seen;
        for (std::size_t i = 0; i < jpsi.size(); ++i) {
            std::string path = "/psi/" + std::to_string(i);
            const json& entry = jpsi[i];
            if (!entry.is_object()) throw SchemaError(path, "expected object");
            check_keys(entry, path, {"marker", "pieces"});
            PsiEntryDoc pe;
            pe.marker = require_string(require_field(entry, path, "marker"), path + "/marker");
            if (pe.marker.empty()) throw SchemaError(path + "/marker", "marker must be non-empty");
            if (pe.marker == "generic") throw SchemaError(path + "/marker", "\"generic\" is reserved");
            if (!seen.insert(pe.marker).second) throw SchemaError(path + "/marker", "duplicate marker");
            const json& jpieces = require_field(entry, path, "pieces");
            if (!jpieces.is_array() || jpieces.empty())
                throw SchemaError(path + "/pieces", "expected non-empty array");
            for (std::size_t k = 0; k < jpieces.size(); ++k) {
                std::string ppath = path + "/pieces/" + std::to_string(k);
                const json& piece = jpieces[k];
                if (!piece.is_object()) throw SchemaError(ppath, "expected object");
                check_keys(piece, ppath, {"grad", "const"});
                PsiPieceDoc pd;
                pd.grad = require_rat_vec(require_field(piece, ppath, "grad"), ppath + "/grad",
                                          static_cast<std::size_t>(doc.dim));
                pd.constant = require_rational(require_field(piece, ppath, "const"), ppath + "/const");
                pe.pieces.push_back(std::move(pd));
            }
            doc.psi.push_back(std::move(pe));
        }
    } else {
        if (j.contains("dh_barycenter"))
            doc.dh_barycenter = require_rat_vec(j.at("dh_barycenter"), "/dh_barycenter",
                                                static_cast<std::size_t>(doc.dim));
        const json& jdegs = require_field(j, "", "degenerations");
        if (!jdegs.is_array()) throw SchemaError("/degenerations", "expected array");
        std::set<std::string> seen;
        for (std::size_t i = 0; i < jdegs.size(); ++i) {
            std::string path = "/degenerations/" + std::to_string(i);
            const json& entry = jdegs[i];
            if (!entry.is_object()) throw SchemaError(path, "expected object");
            check_keys(entry, path, {"label", "vertices"});
            DeltaDoc dd;
            dd.label = require_string(require_field(entry, path, "label"), path + "/label");
            if (dd.label.empty()) throw SchemaError(path + "/label", "label must be non-empty");
            if (!seen.insert(dd.label).second) throw SchemaError(path + "/label", "duplicate label");
            dd.vertices = require_vertex_list(require_field(entry, path, "vertices"), path + "/vertices",
                                              static_cast<std::size_t>(doc.dim) + 1);
            doc.degenerations.push_back(std::move(dd));
        }
        if (!doc.dh_barycenter && doc.degenerations.empty())
            throw SchemaError("/degenerations", "need dh_barycenter or at least one degeneration");
    }
    return doc;
}

std::string serialize_input(const InputDocument& doc) {
    json j;
    j["mode"] = doc.mode == InputMode::Divisorial ? "divisorial" : "degenerations";
    j["name"] = doc.name;
    j["dim"] = doc.dim;
    json verts = json::array();
    for (const RatVec& v : doc.box_vertices) verts.push_back(rat_vec_json(v));
    j["box"] = json{{"vertices", verts}};
    if (doc.mode == InputMode::Divisorial) {
        json psi = json::array();
        for (const PsiEntryDoc& pe : doc.psi) {
            json pieces = json::array();
            for (const PsiPieceDoc& pd : pe.pieces)
                pieces.push_back(json{{"grad", rat_vec_json(pd.grad)}, {"const", pd.constant.str()}});
            psi.push_back(json{{"marker", pe.marker}, {"pieces", pieces}});
        }
        j["psi"] = psi;
    } else {
        if (doc.dh_barycenter) j["dh_barycenter"] = rat_vec_json(*doc.dh_barycenter);
        json degs = json::array();
        for (const DeltaDoc& dd : doc.degenerations) {
            json dverts = json::array();
            for (const RatVec& v : dd.vertices) dverts.push_back(rat_vec_json(v));
            degs.push_back(json{{"label", dd.label}, {"vertices", dverts}});
        }
        j["degenerations"] = degs;
    }
    return j.dump(2) + "\n";
}

RxInput to_engine_input(const InputDocument& doc) {
    Polytope box = convex_hull(doc.box_vertices);
    if (doc.mode == InputMode::Divisorial) {
        DivisorialInput in{DivisorialPolytope{box, {}}};
        for (const PsiEntryDoc& pe : doc.psi) {
            std::vector<AffineFunc> pieces;
            for (const PsiPieceDoc& pd : pe.pieces) pieces.push_back(AffineFunc{pd.grad, pd.constant});
            in.dp.psi.emplace(pe.marker, PiecewiseAffine(std::move(pieces)));
        }
        return in;
    }
    DegenerationsInput in{box, doc.dh_barycenter, {}};
    for (const DeltaDoc& dd : doc.degenerations) in.deltas.push_back(DeltaSpec{dd.label, dd.vertices});
    return in;
}

std::string serialize_report(const std::string& name, const RxReport& rep) {
    json j;
    j["name"] = name;
    j["R"] = rep.r.str();
    j["R_decimal"] = decimal20(rep.r);
    j["source"] = rep.source.str();
    j["base_ratio"] = rep.base.str();
    j["bc_nu"] = rat_vec_json(rep.bc_nu);
    json degs = json::array();
    for (const Degeneration& d : rep.degenerations) {
        json e;
        e["label"] = d.label.str();
        e["bc"] = rat_vec_json(d.bc);
        if (d.degenerate_center) {
            e["t_star"] = nullptr;
            e["q"] = nullptr;
            e["sigma_rays"] = json::array();
        } else {
            e["t_star"] = d.t_star.str();
            e["q"] = rat_vec_json(d.q);
            json rays = json::array();
            for (const IntVec& r : d.sigma.rays) rays.push_back(int_vec_json(r));
            e["sigma_rays"] = rays;
        }
        e["ratio"] = d.ratio.str();
        e["some_ray_in_H"] = d.some_ray_in_H;
        e["all_rays_in_H"] = d.all_rays_in_H;
        e["contributes"] = d.contributes;
        degs.push_back(std::move(e));
    }
    j["degenerations"] = degs;
    j["validation"] = rep.validation;
    return j.dump(2) + "\n";
}

std::string decimal20(const Rat& x) {
    if (x.is_zero()) return "0";
    const bool negative = x.sign() < 0;
    Rat a = x.abs();

    // 10^(e-1) <= a < 10^e
    long e = 1;
    while (a >= Rat(pow10(static_cast<unsigned long>(e)))) ++e;
    if (a < Rat(1)) {
        e = 0;
        Rat bound(Int(1), pow10(1));
        while (a < bound) {
            --e;
            bound = Rat(Int(1), pow10(static_cast<unsigned long>(1 - e)));
        }
    }

    const long k = 20 - e;
    Int num = x.abs().num() * (k >= 0 ? pow10(static_cast<unsigned long>(k)) : Int(1));
    Int den = x.abs().den() * (k < 0 ? pow10(static_cast<unsigned long>(-k)) : Int(1));
    Int digits, rem;
    mpz_fdiv_qr(digits.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den) digits += 1;
    if (digits == pow10(20)) {
        digits = pow10(19);
        ++e;
    }

    std::string ds = digits.get_str();
    std::string out;
    if (e >= 1 && e <= 20) {
        out = ds.substr(0, static_cast<std::size_t>(e));
        std::string frac = ds.substr(static_cast<std::size_t>(e));
        if (!frac.empty()) out += "." + frac;
    } else if (e <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-e), '0') + ds;
    } else {
        out = ds + std::string(static_cast<std::size_t>(e - 20), '0');
    }
    return negative ? "-" + out : out;
}

std::string emit_svg(const Polytope& box, const RatVec& bc, const RatVec& q) {
    if (box.dim() != 2) throw UnsupportedDimensionError();
    if (bc.size() != 2 || q.size() != 2) throw std::invalid_argument("emit_svg: markers must be 2-d");

    RatVec origin = zero_vec(2);
    std::vector<const RatVec*> all;
    for (const RatVec& v : box.vertices()) all.push_back(&v);
    all.push_back(&bc);
    all.push_back(&q);
    all.push_back(&origin);

    Rat minx = (*all[0])[0], maxx = minx, miny = (*all[0])[1], maxy = miny;
    for (const RatVec* p : all) {
        minx = min(minx, (*p)[0]);
        maxx = max(maxx, (*p)[0]);
        miny = min(miny, (*p)[1]);
        maxy = max(maxy, (*p)[1]);
    }
    Rat w = maxx - minx, h = maxy - miny;
    Rat extent = max(w, h);
    if (extent.is_zero()) extent = Rat(1);

    const long canvas = 480, margin = 40, span = canvas - 2 * margin;
    auto px = [&](const Rat& x) {
        Rat r = Rat(margin) + (x - minx) / extent * Rat(span);
        Int rounded;
        Rat shifted = r + Rat(1, 2);
        mpz_fdiv_q(rounded.get_mpz_t(), shifted.num().get_mpz_t(), shifted.den().get_mpz_t());
        return rounded.get_str();
    };
    auto py = [&](const Rat& y) {  // flip: svg y grows downward
        Rat r = Rat(margin) + (maxy - y) / extent * Rat(span);
        Int rounded;
        Rat shifted = r + Rat(1, 2);
        mpz_fdiv_q(rounded.get_mpz_t(), shifted.num().get_mpz_t(), shifted.den().get_mpz_t());
        return rounded.get_str();
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas << "\" height=\"" << canvas
        << "\" viewBox=\"0 0 " << canvas << " " << canvas << "\">\n";
    svg << "  <polygon points=\"";
    std::vector<int> cycle = boundary_cycle_2d(box);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const RatVec& v = box.vertices()[cycle[i]];
        svg << (i ? " " : "") << px(v[0]) << "," << py(v[1]);
    }
    svg << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

    struct Marker {
        const char* name;
        const RatVec* p;
    };
    const Marker markers[] = {{"bc", &bc}, {"O", &origin}, {"q", &q}};
    for (const Marker& m : markers) {
        std::string cx = px((*m.p)[0]), cy = py((*m.p)[1]);
        svg << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"black\"/>\n";
        svg << "  <text x=\"" << cx << "\" y=\"" << cy << "\" dx=\"8\" dy=\"-6\" font-size=\"16\">" << m.name
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace rx
