#include "cliffspec/triple_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace cliffspec {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

double number_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key))
        throw validation_error(where + ": missing key \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number())
        throw validation_error(where + ": \"" + key + "\" must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw validation_error(where + ": \"" + key + "\" is not finite");
    return d;
}

Mat2 parse_matrix(const json& arr, const std::string& name) {
    if (!arr.is_array() || arr.size() != 2)
        throw validation_error(name + ": expected a 2x2 array");
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
        const json& row = arr.at(std::size_t(r));
        if (!row.is_array() || row.size() != 2)
            throw validation_error(name + ": expected a 2x2 array");
        for (int c = 0; c < 2; ++c) {
            const json& cell = row.at(std::size_t(c));
            const std::string where = name + " entry (" + std::to_string(r + 1) + "," +
                                      std::to_string(c + 1) + ")";
            if (!cell.is_object())
                throw validation_error(where + ": expected an object {\"re\", \"im\"}");
            if (cell.size() != 2)
                throw validation_error(where + ": exactly the keys \"re\" and \"im\" allowed");
            m(r, c) = cplx(number_field(cell, "re", where), number_field(cell, "im", where));
        }
    }
    return m;
}

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json cplx_json(const cplx& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json matrix_json(const Mat2& m) {
    json rows = json::array();
    for (int r = 0; r < 2; ++r) {
        json row = json::array();
        for (int c = 0; c < 2; ++c) row.push_back(cplx_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json coeffs_json(const PauliCoeffs& c) {
    return json{{"a0", c.a0}, {"a1", c.a1}, {"a2", c.a2}, {"a3", c.a3}};
}

} // namespace

HermitianTriple parse_triple_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte);
        throw validation_error("malformed JSON at line " + std::to_string(line) + ", column " +
                               std::to_string(col) + ": " + e.what());
    }

    if (!root.is_object())
        throw validation_error("triple file: top level must be an object");
    for (const auto& item : root.items()) {
        if (item.key() != "A1" && item.key() != "A2" && item.key() != "A3")
            throw validation_error("triple file: unexpected key \"" + item.key() + "\"");
    }
    for (const char* key : {"A1", "A2", "A3"}) {
        if (!root.contains(key))
            throw validation_error(std::string("triple file: missing key \"") + key + "\"");
    }

    const Mat2 a1 = parse_matrix(root.at("A1"), "A1");
    const Mat2 a2 = parse_matrix(root.at("A2"), "A2");
    const Mat2 a3 = parse_matrix(root.at("A3"), "A3");
    return make_triple(a1, a2, a3);
}

HermitianTriple load_triple(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_triple_json(buf.str());
    } catch (const validation_error& e) {
        throw validation_error(path + ": " + e.what());
    }
}

std::string triple_to_json(const HermitianTriple& t) {
    json root{{"A1", matrix_json(t.a1)}, {"A2", matrix_json(t.a2)}, {"A3", matrix_json(t.a3)}};
    return root.dump(2) + "\n";
}

std::string decompose_report_json(const HermitianTriple& t, const CanonicalParams& p) {
    json root;
    root["pauli"] = json{{"A1", coeffs_json(pauli_decompose(t.a1))},
                         {"A2", coeffs_json(pauli_decompose(t.a2))},
                         {"A3", coeffs_json(pauli_decompose(t.a3))}};
    root["canonical"] = json{{"center", vec_json(p.center)},
                             {"a", vec_json(p.a)},
                             {"alpha2", cplx_json(p.alpha2)},
                             {"alpha3", cplx_json(p.alpha3)},
                             {"conjugator", matrix_json(p.conjugator)}};
    return root.dump(2) + "\n";
}

std::string witness_report_json(const WitnessResult& w) {
    json root{{"witness", vec_json(w.witness)},
              {"d_value", w.d_value},
              {"branch", witness_branch_name(w.branch)},
              {"spectrum_point", vec_json(w.spectrum_point)},
              {"gap_at_point", w.gap_at_point}};
    return root.dump(2) + "\n";
}

std::string classification_report_json(const SpectrumClassification& c, const Vec3& center) {
    json root{{"kind", spectrum_kind_name(c.kind)},
              {"foci", json{{"plus", vec_json(c.focus_plus)}, {"minus", vec_json(c.focus_minus)}}},
              {"f_value", c.f_value},
              {"e_value", c.e_value},
              {"situation", e_situation_name(c.situation)},
              {"theta", c.theta},
              {"components_hint", components_hint_name(c.components_hint)},
              {"center", vec_json(center)}};
    return root.dump(2) + "\n";
}

} // namespace cliffspec
