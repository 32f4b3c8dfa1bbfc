#include "oshape/instance_io.hpp"

#include <map>
#include <sstream>

namespace oshape {

namespace {

bool parse_int(const std::string& v, int& out) {
    if (v.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stoi(v, &pos);
    } catch (...) {
        return false;
    }
    return pos == v.size();
}

bool parse_point(const std::string& v, GridPoint& out) {
    // [x,y]
    if (v.size() < 5 || v.front() != '[' || v.back() != ']') return false;
    const size_t comma = v.find(',');
    if (comma == std::string::npos) return false;
    return parse_int(v.substr(1, comma - 1), out.x) &&
           parse_int(v.substr(comma + 1, v.size() - comma - 2), out.y);
}

bool fail(ParseError* err, const std::string& msg) {
    if (err) err->message = msg;
    return false;
}

bool parse_fields(const std::string& line, std::map<std::string, std::string>& kv,
                  ParseError* err) {
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        const size_t eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            return fail(err, "malformed token '" + tok + "' (expected key=value)");
        if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
            return fail(err, "duplicate field '" + tok.substr(0, eq) + "'");
    }
    return true;
}

}  // namespace

std::optional<InstanceDoc> parse_instance_line(const std::string& line, ParseError* err) {
    std::map<std::string, std::string> kv;
    if (!parse_fields(line, kv, err)) return std::nullopt;

    auto get_int = [&](const std::string& key, int& out) {
        auto it = kv.find(key);
        if (it == kv.end()) return fail(err, "missing field '" + key + "'");
        if (!parse_int(it->second, out))
            return fail(err, "field '" + key + "': not an integer");
        return true;
    };
    auto get_point = [&](const std::string& key, GridPoint& out) {
        auto it = kv.find(key);
        if (it == kv.end()) return fail(err, "missing field '" + key + "'");
        if (!parse_point(it->second, out))
            return fail(err, "field '" + key + "': expected [x,y]");
        return true;
    };

    auto fam = kv.find("family");
    if (fam == kv.end()) {
        fail(err, "missing field 'family'");
        return std::nullopt;
    }

    InstanceDoc doc;
    int m, n, k, l, a, c;
    if (fam->second == "R") {
        if (!get_int("m", m) || !get_int("n", n)) return std::nullopt;
        doc.spec = ShapeSpec::rect(m, n);
    } else if (fam->second == "L") {
        if (!get_int("m", m) || !get_int("n", n) || !get_int("k", k) || !get_int("l", l))
            return std::nullopt;
        doc.spec = ShapeSpec::lshape(m, n, k, l);
    } else if (fam->second == "C") {
        int d;
        if (!get_int("m", m) || !get_int("n", n) || !get_int("k", k) ||
            !get_int("l", l) || !get_int("c", c) || !get_int("d", d))
            return std::nullopt;
        doc.spec = ShapeSpec::cshape(m, n, k, l, c, d);
    } else if (fam->second == "O") {
        int b, d;
        if (!get_int("m", m) || !get_int("n", n) || !get_int("k", k) ||
            !get_int("l", l) || !get_int("a", a) || !get_int("b", b) ||
            !get_int("c", c) || !get_int("d", d))
            return std::nullopt;
        doc.spec = ShapeSpec::oshape(m, n, k, l, a, b, c, d);
    } else {
        fail(err, "field 'family': unknown value '" + fam->second + "'");
        return std::nullopt;
    }

    if (!spec_valid(doc.spec)) {
        fail(err, "invalid shape parameters: " + to_string(doc.spec));
        return std::nullopt;
    }
    if (!get_point("s", doc.s) || !get_point("t", doc.t)) return std::nullopt;
    if (doc.s == doc.t) {
        fail(err, "field 't': endpoints must differ");
        return std::nullopt;
    }
    if (!contains_point(doc.spec, doc.s)) {
        fail(err, "field 's': point not in shape");
        return std::nullopt;
    }
    if (!contains_point(doc.spec, doc.t)) {
        fail(err, "field 't': point not in shape");
        return std::nullopt;
    }
    return doc;
}

std::string serialize_instance(const InstanceDoc& doc) {
    std::ostringstream out;
    const ShapeSpec& g = doc.spec;
    switch (g.kind) {
        case ShapeKind::Rect:
            out << "family=R m=" << g.m << " n=" << g.n;
            break;
        case ShapeKind::LShape:
            out << "family=L m=" << g.m << " n=" << g.n << " k=" << g.k << " l=" << g.l;
            break;
        case ShapeKind::CShape:
            out << "family=C m=" << g.m << " n=" << g.n << " k=" << g.k << " l=" << g.l
                << " c=" << g.c << " d=" << g.d;
            break;
        case ShapeKind::OShape:
            out << "family=O m=" << g.m << " n=" << g.n << " k=" << g.k << " l=" << g.l
                << " a=" << g.a << " b=" << g.b << " c=" << g.c << " d=" << g.d;
            break;
    }
    out << " s=[" << doc.s.x << "," << doc.s.y << "]"
        << " t=[" << doc.t.x << "," << doc.t.y << "]";
    return out.str();
}

}  // namespace oshape
