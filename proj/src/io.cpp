#include "projrigid/io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace projrigid {

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string magnitude_str(const Rational& q) { return q < 0 ? Rational(-q).get_str() : q.get_str(); }

}  // namespace

std::string render_rational(const Rational& q) { return rational_str(q); }

std::string render_field(const FieldElement& x) {
    struct Term {
        Rational coeff;
        const char* sym;  // nullptr for the rational part
    };
    std::vector<Term> terms;
    if (x.a() != 0) terms.push_back({x.a(), nullptr});
    if (x.b() != 0) terms.push_back({x.b(), "r"});
    if (x.c() != 0) terms.push_back({x.c(), "i"});
    if (x.e() != 0) terms.push_back({x.e(), "i*r"});
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t idx = 0; idx < terms.size(); ++idx) {
        const Term& t = terms[idx];
        const bool neg = t.coeff < 0;
        std::string mag = magnitude_str(t.coeff);
        std::string body;
        if (t.sym == nullptr) {
            body = mag;
        } else if (mag == "1") {
            body = t.sym;
        } else {
            body = mag + "*" + t.sym;
        }
        if (idx == 0) {
            if (neg) {
                if (t.sym == nullptr) {
                    out += rational_str(t.coeff);
                } else {
                    out += "-" + mag + "*" + t.sym;
                }
            } else {
                out += body;
            }
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

namespace {

struct FieldParser {
    const std::string& s;
    std::size_t pos = 0;
    int d;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("field element '" + s + "': " + what + " at position " +
                         std::to_string(pos));
    }

    Rational integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return Rational(s.substr(start, pos - start));
    }

    Rational coeff() {
        Rational num = integer();
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected positive denominator");
            Rational den(s.substr(start, pos - start));
            if (den == 0) fail("zero denominator");
            Rational q = num / den;
            q.canonicalize();
            return q;
        }
        return num;
    }

    // Returns 1 for i, 2 for r, 3 for i*r.
    int symbol() {
        skip_ws();
        if (pos >= s.size()) fail("expected symbol");
        if (s[pos] == 'r') {
            ++pos;
            return 2;
        }
        if (s[pos] == 'i') {
            ++pos;
            std::size_t save = pos;
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws();
                if (pos < s.size() && s[pos] == 'r') {
                    ++pos;
                    return 3;
                }
                pos = save;  // the '*' belongs to the term separator context
                fail("expected 'r' after 'i*'");
            }
            pos = save;
            return 1;
        }
        fail("expected 'i', 'r' or 'i*r'");
    }

    FieldElement parse() {
        Rational a = 0, b = 0, c = 0, e = 0;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= s.size()) {
                if (first) fail("empty element");
                break;
            }
            int sign = 1;
            if (!first) {
                if (s[pos] == '+') {
                    ++pos;
                } else if (s[pos] == '-') {
                    sign = -1;
                    ++pos;
                } else {
                    fail("expected '+' or '-' between terms");
                }
                skip_ws();
            }
            Rational co;
            int sym = 0;  // 0 = rational term
            if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'r')) {
                co = 1;
                sym = symbol();
            } else {
                co = coeff();
                skip_ws();
                if (pos < s.size() && s[pos] == '*') {
                    ++pos;
                    sym = symbol();
                }
            }
            co *= sign;
            switch (sym) {
                case 0: a += co; break;
                case 1: c += co; break;
                case 2: b += co; break;
                case 3: e += co; break;
            }
            first = false;
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] != '+' && s[pos] != '-') fail("unexpected trailing input");
        }
        if (d < 1 && (b != 0 || e != 0))
            throw ParseError("field element '" + s + "' uses sqrt(d) but no field tag is set");
        return FieldElement(a, b, c, e, d >= 1 ? d : 0);
    }
};

}  // namespace

FieldElement parse_field(const std::string& text, int d) {
    FieldParser p{text, 0, d};
    return p.parse();
}

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(where) + ": missing required key '" + key + "'");
    return *it;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ParseError("file '" + path + "' is not valid JSON: " + e.what());
    }
}

Matrix parse_matrix(const json& j, Eigen::Index size, int d, const std::string& where) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != size)
        throw ParseError(where + ": expected a " + std::to_string(size) + "x" +
                         std::to_string(size) + " array of field-element strings");
    Matrix m(size, size);
    for (Eigen::Index r = 0; r < size; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != size)
            throw ParseError(where + ": row " + std::to_string(r) + " has wrong length");
        for (Eigen::Index c = 0; c < size; ++c) {
            const json& cell = row[static_cast<std::size_t>(c)];
            if (!cell.is_string())
                throw ParseError(where + ": entries must be field-element strings");
            m(r, c) = parse_field(cell.get<std::string>(), d);
        }
    }
    return m;
}

}  // namespace

InputDocument load_input(const std::string& path) {
    json j = parse_json(path);
    if (!j.is_object()) throw ParseError("input document must be a JSON object");
    InputDocument doc;

    const json& field = require(j, "field", "input");
    const json& dval = require(field, "d", "input.field");
    if (!dval.is_number_integer() || dval.get<long long>() < 1)
        throw ParseError("input.field.d must be a positive integer");
    doc.d = static_cast<int>(dval.get<long long>());

    const json& gens = require(j, "generators", "input");
    if (!gens.is_array() || gens.empty())
        throw ParseError("input.generators must be a nonempty array of names");
    for (const json& g : gens) {
        if (!g.is_string()) throw ParseError("generator names must be strings");
        doc.pres.generators.push_back(g.get<std::string>());
    }
    for (std::size_t i = 0; i < doc.pres.generators.size(); ++i)
        for (std::size_t k = i + 1; k < doc.pres.generators.size(); ++k)
            if (doc.pres.generators[i] == doc.pres.generators[k])
                throw ParseError("duplicate generator name '" + doc.pres.generators[i] + "'");

    const json& rels = require(j, "relators", "input");
    if (!rels.is_array()) throw ParseError("input.relators must be an array of word strings");
    for (const json& r : rels) {
        if (!r.is_string()) throw ParseError("relators must be word strings");
        doc.pres.relators.push_back(parse_word(r.get<std::string>(), doc.pres.generators));
    }

    const json& cusps = require(j, "cusps", "input");
    if (!cusps.is_array()) throw ParseError("input.cusps must be an array");
    for (const json& c : cusps) {
        const json& mer = require(c, "meridian", "input.cusps[]");
        const json& lon = require(c, "longitude", "input.cusps[]");
        if (!mer.is_string() || !lon.is_string())
            throw ParseError("cusp words must be strings");
        Cusp cusp;
        cusp.meridian = parse_word(mer.get<std::string>(), doc.pres.generators);
        cusp.longitude = parse_word(lon.get<std::string>(), doc.pres.generators);
        doc.pres.cusps.push_back(std::move(cusp));
    }

    const json& asph = require(j, "aspherical", "input");
    if (!asph.is_boolean()) throw ParseError("input.aspherical must be a boolean");
    doc.pres.aspherical = asph.get<bool>();

    const json& rep = require(j, "representation", "input");
    const json& form = require(rep, "form", "input.representation");
    if (!form.is_string()) throw ParseError("input.representation.form must be a string");
    doc.form = form.get<std::string>();
    Eigen::Index size;
    if (doc.form == "sl2c") {
        size = 2;
    } else if (doc.form == "so31") {
        size = 4;
    } else {
        throw ParseError("input.representation.form must be 'sl2c' or 'so31'");
    }
    const json& mats = require(rep, "matrices", "input.representation");
    if (!mats.is_object())
        throw ParseError("input.representation.matrices must map generator names to matrices");
    for (const auto& [key, value] : mats.items()) {
        (void)value;
        bool known = false;
        for (const std::string& g : doc.pres.generators) known = known || (g == key);
        if (!known)
            throw ParseError("representation matrix given for undeclared generator '" + key + "'");
    }
    for (const std::string& g : doc.pres.generators) {
        auto it = mats.find(g);
        if (it == mats.end())
            throw ParseError("missing representation matrix for generator '" + g + "'");
        doc.generator_matrices.push_back(
            parse_matrix(*it, size, doc.d, "input.representation.matrices." + g));
    }
    return doc;
}

nlohmann::json serialize_input(const InputDocument& doc) {
    json j;
    j["field"] = {{"d", doc.d}};
    j["generators"] = doc.pres.generators;
    json rels = json::array();
    for (const Word& r : doc.pres.relators) rels.push_back(word_to_string(r, doc.pres.generators));
    j["relators"] = rels;
    json cusps = json::array();
    for (const Cusp& c : doc.pres.cusps) {
        cusps.push_back({{"meridian", word_to_string(c.meridian, doc.pres.generators)},
                         {"longitude", word_to_string(c.longitude, doc.pres.generators)}});
    }
    j["cusps"] = cusps;
    j["aspherical"] = doc.pres.aspherical;
    json mats = json::object();
    for (std::size_t g = 0; g < doc.pres.generators.size(); ++g)
        mats[doc.pres.generators[g]] = matrix_to_json(doc.generator_matrices[g]);
    j["representation"] = {{"form", doc.form}, {"matrices", mats}};
    return j;
}

Representation build_representation(const InputDocument& doc) {
    if (doc.form == "sl2c") return Representation::lift_from_sl2(doc.generator_matrices);
    return Representation(doc.generator_matrices);
}

std::string file_hash(const std::string& path) {
    std::string bytes = read_file(path);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

nlohmann::json report_document(const std::string& command, const std::string& hash,
                               nlohmann::json results) {
    json j;
    j["command"] = command;
    j["input"] = {{"hash", hash}};
    j["results"] = std::move(results);
    j["version"] = kToolVersion;
    return j;
}

namespace {

void human_lines(const json& j, const std::string& indent, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value[0].is_array() || value[0].is_object()))) {
                os << indent << key << ":\n";
                human_lines(value, indent + "  ", os);
            } else if (value.is_array()) {
                os << indent << key << ": " << value.dump() << "\n";
            } else if (value.is_string()) {
                os << indent << key << ": " << value.get<std::string>() << "\n";
            } else {
                os << indent << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const json& item : j) {
            if (item.is_object() || item.is_array()) {
                os << indent << "-\n";
                human_lines(item, indent + "  ", os);
            } else {
                os << indent << "- " << (item.is_string() ? item.get<std::string>() : item.dump())
                   << "\n";
            }
        }
    } else {
        os << indent << j.dump() << "\n";
    }
}

}  // namespace

std::string render_human(const nlohmann::json& report) {
    std::ostringstream os;
    human_lines(report, "", os);
    return os.str();
}

nlohmann::json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(render_field(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, int d) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a nonempty array");
    Eigen::Index size = static_cast<Eigen::Index>(j.size());
    return parse_matrix(j, size, d, "matrix");
}

nlohmann::json vector_to_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(render_field(v(i)));
    return out;
}

Cochain1 load_cocycle(const std::string& path, const InputDocument& doc) {
    json j = parse_json(path);
    const json& mod = require(j, "module", "cocycle");
    if (!mod.is_string()) throw ParseError("cocycle.module must be a string");
    Cochain1 z;
    z.module = module_from_name(mod.get<std::string>());
    const json& values = require(j, "values", "cocycle");
    if (!values.is_object())
        throw ParseError("cocycle.values must map generator names to 4x4 matrices");
    for (const std::string& g : doc.pres.generators) {
        auto it = values.find(g);
        if (it == values.end())
            throw ParseError("cocycle is missing a value for generator '" + g + "'");
        z.values.push_back(parse_matrix(*it, 4, doc.d, "cocycle.values." + g));
    }
    return z;
}

Matrix load_matrix_file(const std::string& path, const InputDocument& doc) {
    json j = parse_json(path);
    const json& m = require(j, "matrix", "matrix file");
    return parse_matrix(m, 4, doc.d, "matrix file");
}

std::vector<Word> load_endomorphism(const std::string& path, const InputDocument& doc) {
    json j = parse_json(path);
    const json& phi = require(j, "map", "endomorphism");
    if (!phi.is_object())
        throw ParseError("endomorphism.map must map generator names to word strings");
    std::vector<Word> out;
    for (const std::string& g : doc.pres.generators) {
        auto it = phi.find(g);
        if (it == phi.end())
            throw ParseError("endomorphism is missing an image for generator '" + g + "'");
        if (!it->is_string()) throw ParseError("endomorphism images must be word strings");
        out.push_back(parse_word(it->get<std::string>(), doc.pres.generators));
    }
    return out;
}

}  // namespace projrigid
