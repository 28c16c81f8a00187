#include "rsiplan/cell.hpp"

#include <stdexcept>
#include <unordered_set>

#include "text_format.hpp"

namespace rsiplan {

namespace {

constexpr std::string_view kHeader = "cell_id,lat,lon,bearing_deg,channel,rsi";

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

} // namespace

std::vector<Cell> parse_cells(std::string_view csv_text) {
    const auto lines = detail::split_lines(csv_text);
    if (lines.empty() || detail::is_blank(lines[0])) {
        throw std::runtime_error("line 1: missing header, expected '" + std::string(kHeader) + "'");
    }
    if (lines[0] != kHeader) {
        fail(1, "bad header '" + std::string(lines[0]) + "', expected '" + std::string(kHeader) + "'");
    }

    std::vector<Cell> cells;
    std::unordered_set<std::string> seen_ids;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string_view line = lines[i];
        if (detail::is_blank(line)) continue;

        const auto fields = detail::split_fields(line);
        if (fields.size() != 6) {
            fail(line_no, "expected 6 fields, got " + std::to_string(fields.size()));
        }

        Cell cell;
        cell.cell_id = std::string(fields[0]);
        if (cell.cell_id.empty()) fail(line_no, "empty cell_id");
        if (!seen_ids.insert(cell.cell_id).second) {
            fail(line_no, "duplicate cell_id '" + cell.cell_id + "'");
        }

        if (!detail::parse_double(fields[1], cell.latitude)) fail(line_no, "unparsable lat");
        if (!detail::parse_double(fields[2], cell.longitude)) fail(line_no, "unparsable lon");
        double bearing = 0.0;
        if (!detail::parse_double(fields[3], bearing)) fail(line_no, "unparsable bearing_deg");
        std::int64_t channel = 0;
        if (!detail::parse_i64(fields[4], channel)) fail(line_no, "unparsable channel");

        if (cell.latitude < -90.0 || cell.latitude > 90.0) {
            fail(line_no, "latitude out of range [-90, 90]");
        }
        if (cell.longitude < -180.0 || cell.longitude > 180.0) {
            fail(line_no, "longitude out of range [-180, 180]");
        }
        if (channel < 0) fail(line_no, "negative channel");
        cell.bearing_deg = normalize_bearing_deg(bearing);
        cell.channel = static_cast<std::uint32_t>(channel);

        if (!fields[5].empty()) {
            std::int64_t rsi = 0;
            if (!detail::parse_i64(fields[5], rsi)) fail(line_no, "unparsable rsi");
            if (rsi < 0 || rsi > kMaxRsi) fail(line_no, "rsi out of range [0, 837]");
            cell.rsi = static_cast<int>(rsi);
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

std::string cells_to_csv(std::span<const Cell> cells) {
    std::string out(kHeader);
    out += '\n';
    for (const Cell& c : cells) {
        out += c.cell_id;
        out += ',';
        out += detail::format_double(c.latitude);
        out += ',';
        out += detail::format_double(c.longitude);
        out += ',';
        out += detail::format_double(c.bearing_deg);
        out += ',';
        out += std::to_string(c.channel);
        out += ',';
        if (c.rsi) out += std::to_string(*c.rsi);
        out += '\n';
    }
    return out;
}

} // namespace rsiplan
