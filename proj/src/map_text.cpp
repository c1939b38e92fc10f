#include "ncalg/map_text.hpp"

#include <optional>
#include <regex>
#include <sstream>

namespace ncalg {

namespace {

std::string strip_comment(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    return line;
}

}  // namespace

AlgebraMap parse_map(std::string_view text) {
    static const std::regex header(R"(^\s*map\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)\s*\((homo|anti)\)\s*$)");
    static const std::regex image_line(R"(^\s*([^\s:]+)\s*:=(.*)$)");

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    std::string name;
    PresentationPtr source, target;
    MapKind kind = MapKind::Homomorphism;
    std::vector<std::optional<Element>> images;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::smatch m;
        if (!source) {
            if (!std::regex_match(line, m, header)) {
                throw ParseError("expected 'map NAME : SOURCE -> TARGET (homo|anti)'", line_no, 1);
            }
            name = m[1];
            try {
                source = load_presentation(m[2].str());
                target = load_presentation(m[3].str());
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(e.what(), line_no, 1);
            }
            kind = m[4] == "anti" ? MapKind::Antihomomorphism : MapKind::Homomorphism;
            images.assign(source->alphabet()->size(), std::nullopt);
            continue;
        }
        if (!std::regex_match(line, m, image_line)) throw ParseError("expected 'GENERATOR := expression'", line_no, 1);
        const std::string gen = m[1];
        auto sym = source->alphabet()->find(gen);
        if (!sym) throw ParseError("'" + gen + "' is not a generator of " + source->name(), line_no, 1);
        if (images[*sym]) throw ParseError("second image for '" + gen + "'", line_no, 1);
        const int offset = static_cast<int>(m.position(2));
        try {
            images[*sym] = target->parse(m[2].str());
        } catch (const ParseError& e) {
            throw ParseError(e.reason(), line_no, e.column() + offset);
        }
    }
    if (!source) throw ParseError("missing map header", line_no + 1, 1);
    std::vector<Element> out;
    for (std::size_t s = 0; s < images.size(); ++s) {
        if (!images[s]) {
            throw ParseError("no image for generator '" + (*source->alphabet())[s].name + "'", line_no + 1, 1);
        }
        out.push_back(*images[s]);
    }
    return AlgebraMap(name, source, target, std::move(out), kind);
}

std::string map_to_text(const AlgebraMap& map) {
    std::string out = "map " + map.name() + " : " + map.source()->name() + " -> " + map.target()->name() + " (" +
                      (map.kind() == MapKind::Antihomomorphism ? "anti" : "homo") + ")\n";
    const auto& alphabet = *map.source()->alphabet();
    for (std::size_t s = 0; s < alphabet.size(); ++s) {
        out += alphabet[s].name + " := " + map.images()[s].to_text() + "\n";
    }
    return out;
}

}  // namespace ncalg
