#include "scx/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace scx {
namespace {

[[noreturn]] void fail_at(const std::string& source, std::size_t line, const std::string& message) {
    throw validation_error(source + ":" + std::to_string(line) + ": " + message);
}

} // namespace

FacetFormat parse_facet_format(const std::string& s) {
    if (s == "auto") {
        return FacetFormat::auto_detect;
    }
    if (s == "text") {
        return FacetFormat::text;
    }
    if (s == "structured") {
        return FacetFormat::structured;
    }
    throw validation_error("unknown facet format '" + s + "'");
}

const char* facet_format_name(FacetFormat f) {
    switch (f) {
    case FacetFormat::text:
        return "text";
    case FacetFormat::structured:
        return "structured";
    default:
        return "auto";
    }
}

Complex read_complex_text(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t line_no = 0;
    long long n = 0;
    bool have_n = false;
    std::vector<std::vector<int>> facets;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        if (!have_n) {
            if (!(tokens >> n)) {
                std::string word;
                if (tokens.clear(), tokens >> word) {
                    fail_at(source, line_no, "expected vertex count, got '" + word + "'");
                }
                continue; // blank first lines are tolerated
            }
            std::string extra;
            if (tokens >> extra) {
                fail_at(source, line_no, "unexpected token '" + extra + "' after vertex count");
            }
            if (n < 1 || n > 1000000) {
                fail_at(source, line_no, "vertex count " + std::to_string(n) + " out of range");
            }
            have_n = true;
            continue;
        }
        std::vector<int> facet;
        long long v = 0;
        while (tokens >> v) {
            if (v < 1 || v > n) {
                fail_at(source, line_no,
                        "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
            }
            facet.push_back(static_cast<int>(v));
        }
        if (!tokens.eof()) {
            std::string word;
            tokens.clear();
            tokens >> word;
            fail_at(source, line_no, "expected integer, got '" + word + "'");
        }
        if (!facet.empty()) {
            facets.push_back(std::move(facet));
        }
    }
    if (!have_n) {
        fail_at(source, 1, "missing vertex count line");
    }
    if (facets.empty()) {
        fail_at(source, line_no == 0 ? 1 : line_no, "no facets listed");
    }
    try {
        return Complex::from_facets(static_cast<int>(n), facets);
    } catch (const validation_error& e) {
        throw validation_error(source + ":1: " + e.what());
    }
}

Complex read_complex_structured(std::istream& in, const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail_at(source, 1, std::string("invalid structured input: ") + e.what());
    }
    if (!doc.is_object()) {
        fail_at(source, 1, "structured input must be an object");
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        fail_at(source, 1, "missing integer field 'n'");
    }
    if (!doc.contains("facets") || !doc["facets"].is_array()) {
        fail_at(source, 1, "missing array field 'facets'");
    }
    long long n = doc["n"].get<long long>();
    if (n < 1 || n > 1000000) {
        fail_at(source, 1, "vertex count " + std::to_string(n) + " out of range");
    }
    std::vector<std::vector<int>> facets;
    for (const auto& entry : doc["facets"]) {
        if (!entry.is_array()) {
            fail_at(source, 1, "every facet must be an array of integers");
        }
        std::vector<int> facet;
        for (const auto& value : entry) {
            if (!value.is_number_integer()) {
                fail_at(source, 1, "every facet must be an array of integers");
            }
            long long v = value.get<long long>();
            if (v < 1 || v > n) {
                fail_at(source, 1,
                        "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
            }
            facet.push_back(static_cast<int>(v));
        }
        facets.push_back(std::move(facet));
    }
    try {
        return Complex::from_facets(static_cast<int>(n), facets);
    } catch (const validation_error& e) {
        throw validation_error(source + ":1: " + e.what());
    }
}

Complex read_complex_file(const std::string& path, FacetFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw validation_error("cannot open '" + path + "'");
    }
    if (format == FacetFormat::auto_detect) {
        int c = in.peek();
        while (c != std::char_traits<char>::eof() &&
               (c == ' ' || c == '\t' || c == '\n' || c == '\r')) {
            in.get();
            c = in.peek();
        }
        format = (c == '{') ? FacetFormat::structured : FacetFormat::text;
    }
    if (format == FacetFormat::structured) {
        return read_complex_structured(in, path);
    }
    return read_complex_text(in, path);
}

std::string to_facet_text(const Complex& k) {
    std::ostringstream out;
    out << k.vertex_count() << "\n";
    for (const Face& f : k.facets()) {
        bool first = true;
        for (int v : f.vertices()) {
            if (!first) {
                out << " ";
            }
            out << v;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

std::string to_facet_structured(const Complex& k) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = "1";
    doc["n"] = k.vertex_count();
    auto facets = nlohmann::ordered_json::array();
    for (const Face& f : k.facets()) {
        facets.push_back(f.vertices());
    }
    doc["facets"] = std::move(facets);
    return doc.dump(2) + "\n";
}

void write_complex_file(const std::string& path, const Complex& k, FacetFormat format) {
    std::ofstream out(path);
    if (!out) {
        throw validation_error("cannot write '" + path + "'");
    }
    out << (format == FacetFormat::structured ? to_facet_structured(k) : to_facet_text(k));
    if (!out) {
        throw validation_error("write failed for '" + path + "'");
    }
}

} // namespace scx
