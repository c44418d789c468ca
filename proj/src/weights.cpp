#include "equidom/weights.hpp"

#include <istream>
#include <sstream>

#include "equidom/errors.hpp"

namespace equidom {

std::string serialize_weight_structure(const WeightStructure& s) {
    std::ostringstream os;
    for (size_t v = 0; v < s.weights.size(); ++v)
        os << v + 1 << " " << s.weights[v] << "\n";
    os << "t " << s.target << "\n";
    return os.str();
}

WeightStructure parse_weight_structure(std::istream& in, int vertex_count) {
    WeightStructure s;
    s.weights.assign(vertex_count, 0);
    std::vector<char> seen(vertex_count, 0);
    bool have_target = false;
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& why) -> void {
        std::ostringstream os;
        os << "parse error at line " << line_no << ": " << why;
        throw ParseError(os.str());
    };
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream is(line);
        if (line[pos] == 't') {
            std::string tag;
            is >> tag;
            if (tag != "t" || !(is >> s.target) || s.target < 1) fail("malformed target line");
            have_target = true;
            continue;
        }
        int id;
        Weight w;
        if (!(is >> id >> w)) fail("malformed weight line");
        if (id < 1 || id > vertex_count) fail("vertex id out of range");
        if (seen[id - 1]) fail("duplicate vertex id");
        if (w < 1) fail("weights must be positive");
        seen[id - 1] = 1;
        s.weights[id - 1] = w;
    }
    if (!have_target) throw ParseError("parse error: missing target line");
    for (int v = 0; v < vertex_count; ++v)
        if (!seen[v]) {
            std::ostringstream os;
            os << "parse error: no weight for vertex " << v + 1;
            throw ParseError(os.str());
        }
    return s;
}

WeightStructure parse_weight_structure(const std::string& text, int vertex_count) {
    std::istringstream is(text);
    return parse_weight_structure(is, vertex_count);
}

} // namespace equidom
