#include "kdsim/line_list.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kdsim/constants.hpp"
#include "kdsim/error.hpp"

namespace kdsim {

namespace {

LineList parse_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("line list: ") + e.what());
    }
    detail::require(doc.is_object(), "line list: top level must be an object");
    LineList out;
    for (const auto& [key, value] : doc.items()) {
        if (key == "species") {
            detail::require(value.is_string(), "line list: 'species' must be a string");
            out.species = value.get<std::string>();
        } else if (key == "lines") {
            detail::require(value.is_array(), "line list: 'lines' must be an array");
            for (const auto& rec : value) {
                detail::require(rec.is_object(), "line list: each line must be an object");
                double wavelength = 0.0;
                double weight = 1.0;
                bool have_wavelength = false;
                for (const auto& [k, v] : rec.items()) {
                    detail::require(v.is_number(), "line list: '" + k + "' must be a number");
                    if (k == "wavelength_nm") {
                        wavelength = v.get<double>();
                        have_wavelength = true;
                    } else if (k == "weight") {
                        weight = v.get<double>();
                    } else {
                        throw ValidationError("line list: unknown key '" + k + "'");
                    }
                }
                detail::require(have_wavelength, "line list: record without 'wavelength_nm'");
                out.lines.push_back(line_from_wavelength(wavelength * units::nm, weight));
            }
        } else {
            throw ValidationError("line list: unknown key '" + key + "'");
        }
    }
    return out;
}

LineList parse_text(std::string_view text)
{
    LineList out;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            const auto comment = line.substr(hash + 1);
            const auto tag = comment.find("species:");
            if (tag != std::string::npos) {
                std::istringstream cs(comment.substr(tag + 8));
                cs >> out.species;
            }
            line.erase(hash);
        }
        std::istringstream fields(line);
        double wavelength = 0.0;
        if (!(fields >> wavelength)) {
            detail::require(line.find_first_not_of(" \t\r") == std::string::npos,
                            "line list: cannot parse line " + std::to_string(number));
            continue;
        }
        double weight = 1.0;
        if (!(fields >> weight)) {
            detail::require(fields.eof(), "line list: cannot parse weight on line " + std::to_string(number));
            weight = 1.0;
        }
        std::string rest;
        detail::require(!(fields >> rest), "line list: trailing text on line " + std::to_string(number));
        out.lines.push_back(line_from_wavelength(wavelength * units::nm, weight));
    }
    return out;
}

}  // namespace

LineList parse_line_list(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    LineList out = (first != std::string_view::npos && text[first] == '{') ? parse_json(text)
                                                                          : parse_text(text);
    detail::require(!out.lines.empty(), "line list contains no lines");
    return out;
}

LineList load_line_list(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open line list '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_line_list(buf.str());
}

}  // namespace kdsim
