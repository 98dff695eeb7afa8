#include "qbrst/io.hpp"

#include <fstream>

namespace qbrst {

namespace {

Scalar parse_scalar(const Json& v) {
    try {
        return Scalar::parse(v.get<std::string>());
    } catch (const ParseError& e) {
        throw FormatError(e.what());
    } catch (const DivisionByZero& e) {
        throw FormatError(e.what());
    }
}

}

Json to_json(const Tensor& t) {
    Json legs = Json::array();
    for (auto& l : t.legs()) legs.push_back({{"dim", l.dim}, {"kind", l.kind == LegKind::in ? "in" : "out"}});
    Json entries = Json::array();
    for (auto& [k, v] : t.entries()) {
        Index idx = t.unpack(k);
        for (auto& i : idx) ++i;
        entries.push_back({{"idx", idx}, {"val", v.str()}});
    }
    return {{"legs", legs}, {"entries", entries}};
}

Tensor tensor_from_json(const Json& j) {
    try {
        std::vector<Leg> legs;
        for (auto& l : j.at("legs")) {
            std::string kind = l.at("kind");
            if (kind != "in" && kind != "out") throw FormatError("leg kind must be in or out");
            int dim = l.at("dim");
            if (dim < 1) throw FormatError("leg dim must be positive");
            legs.push_back({dim, kind == "in" ? LegKind::in : LegKind::out});
        }
        Tensor t(legs);
        for (auto& e : j.at("entries")) {
            Index idx = e.at("idx").get<Index>();
            if (idx.size() != legs.size()) throw FormatError("entry index has the wrong rank");
            for (size_t i = 0; i < idx.size(); ++i) {
                if (idx[i] < 1 || idx[i] > legs[i].dim) throw FormatError("entry index out of range");
                --idx[i];
            }
            t.add(idx, parse_scalar(e.at("val")));
        }
        return t;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("tensor json: ") + e.what());
    }
}

Json to_json(const QuantumLieAlgebra& a) { return {{"n_gen", a.n_gen}, {"sigma", to_json(a.sigma)}, {"C", to_json(a.C)}}; }

QuantumLieAlgebra qla_from_json(const Json& j) {
    try {
        QuantumLieAlgebra a{j.at("n_gen").get<int>(), tensor_from_json(j.at("sigma")), tensor_from_json(j.at("C"))};
        check_shape(a);
        return a;
    } catch (const ShapeError& e) {
        throw FormatError(e.what());
    } catch (const Json::exception& e) {
        throw FormatError(std::string("qla json: ") + e.what());
    }
}

Json to_json(const NCPoly& p, const GeneratorAlphabet& al) {
    Json out = Json::array();
    for (auto& [w, c] : p.terms()) {
        Json word = Json::array();
        for (Letter l : w) {
            const Family& f = al.family(fam_of(l));
            int i = idx_of(l);
            Json idx = f.matrix ? Json::array({i / f.cols + 1, i % f.cols + 1}) : Json::array({i + 1});
            word.push_back(Json::array({f.name, idx}));
        }
        out.push_back({{"word", word}, {"coeff", c.str()}});
    }
    return out;
}

NCPoly ncpoly_from_json(const Json& j, const GeneratorAlphabet& al) {
    try {
        NCPoly p;
        for (auto& t : j) {
            Word w;
            for (auto& l : t.at("word")) {
                int f = al.find(l.at(0).get<std::string>());
                if (f < 0) throw FormatError("unknown family " + l.at(0).get<std::string>());
                const Family& fam = al.family(f);
                auto idx = l.at(1).get<std::vector<int>>();
                if (fam.matrix) {
                    if (idx.size() != 2 || idx[0] < 1 || idx[0] > fam.rows || idx[1] < 1 || idx[1] > fam.cols)
                        throw FormatError("bad index for " + fam.name);
                    w.push_back(al.letter(f, idx[0] - 1, idx[1] - 1));
                } else {
                    if (idx.size() != 1 || idx[0] < 1 || idx[0] > fam.rows) throw FormatError("bad index for " + fam.name);
                    w.push_back(make_letter(f, idx[0] - 1));
                }
            }
            p.add(w, parse_scalar(t.at("coeff")));
        }
        return p;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("ncpoly json: ") + e.what());
    }
}

Json to_json(const XTower& xt) {
    Json levels = Json::array();
    for (int r = 1; r <= xt.top(); ++r) {
        const XLevel& l = xt.levels[size_t(r - 1)];
        levels.push_back({{"r", r}, {"provenance", to_string(l.provenance)}, {"kernel_dim", l.kernel_dim}, {"X", to_json(l.X)}});
    }
    Json h = xt.tower.height ? Json(*xt.tower.height) : Json(nullptr);
    return {{"n_gen", xt.qla.n_gen}, {"height", h}, {"levels", levels}};
}

Json to_json(const IdentityReport& r) {
    Json out = Json::array();
    for (auto& i : r.items)
        out.push_back({{"name", i.name}, {"residual_terms", i.residual_terms}, {"expr_terms", i.expr_terms}, {"seconds", i.seconds}});
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << j.dump(2) << '\n';
}

}
