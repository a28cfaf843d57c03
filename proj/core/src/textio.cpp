// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#include "rotext/textio.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "rotext/errors.hpp"

namespace rotext {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

std::string_view strip_bom(std::string_view text) {
  if (text.substr(0, kBom.size()) == kBom) text.remove_prefix(kBom.size());
  return text;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string_view strip_quotes(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s.remove_prefix(1);
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view field, std::size_t line) {
  field = trim(field);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("bad coordinate '" + std::string(field) + "'", line);
  }
  return value;
}

// Calls fn(line_view, line_number) for every non-blank line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  text = strip_bom(text);
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line =
        nl == std::string_view::npos ? text : text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    fn(line, line_no);
  }
}

// Splits off the first n comma fields; the remainder (after the n-th
// comma) is returned untouched so transcriptions may contain commas.
bool split_leading_fields(std::string_view line, std::size_t n,
                          std::vector<std::string_view>& fields,
                          std::string_view& rest) {
  fields.clear();
  std::size_t pos = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) return false;
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  rest = line.substr(pos);
  return true;
}

bool parse_2013_comma(std::string_view line, std::size_t line_no,
                      GroundTruth& out, bool strict) {
  std::vector<std::string_view> fields;
  std::string_view rest;
  if (!split_leading_fields(line, 4, fields, rest)) {
    if (strict) throw ParseError("expected 4 comma-separated coordinates", line_no);
    return false;
  }
  std::array<double, 4> v{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (strict) {
      v[i] = parse_number(fields[i], line_no);
    } else {
      const std::string_view f = trim(fields[i]);
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v[i]);
      if (ec != std::errc{} || ptr != f.data() + f.size()) return false;
    }
  }
  const std::string_view transcription = strip_quotes(trim(rest));
  const auto [l, t, r, b] = std::tuple{v[0], v[1], v[2], v[3]};
  if (!(r > l) || !(b > t)) {
    throw DegenerateGeometryError("line " + std::to_string(line_no) +
                                  ": box needs right > left and bottom > top");
  }
  out.box = RotatedBox((l + r) / 2.0, (t + b) / 2.0, r - l, b - t, 0.0);
  out.ignore = transcription == "###";
  return true;
}

GroundTruth parse_2013_whitespace(std::string_view line, std::size_t line_no) {
  std::array<double, 4> v{};
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end == pos) throw ParseError("expected 4 coordinates", line_no);
    v[i] = parse_number(line.substr(pos, end - pos), line_no);
    pos = end;
  }
  const std::string_view transcription = strip_quotes(trim(line.substr(pos)));
  if (transcription.empty()) {
    throw ParseError("missing transcription field", line_no);
  }
  const auto [l, t, r, b] = std::tuple{v[0], v[1], v[2], v[3]};
  if (!(r > l) || !(b > t)) {
    throw DegenerateGeometryError("line " + std::to_string(line_no) +
                                  ": box needs right > left and bottom > top");
  }
  GroundTruth out;
  out.box = RotatedBox((l + r) / 2.0, (t + b) / 2.0, r - l, b - t, 0.0);
  out.ignore = transcription == "###";
  return out;
}

}  // namespace

std::vector<GroundTruth> parse_icdar2013(std::string_view text,
                                         SeparatorMode sep) {
  std::vector<GroundTruth> out;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    GroundTruth gt;
    switch (sep) {
      case SeparatorMode::comma:
        parse_2013_comma(line, line_no, gt, /*strict=*/true);
        break;
      case SeparatorMode::whitespace:
        gt = parse_2013_whitespace(line, line_no);
        break;
      case SeparatorMode::auto_detect:
        if (!parse_2013_comma(line, line_no, gt, /*strict=*/false)) {
          gt = parse_2013_whitespace(line, line_no);
        }
        break;
    }
    out.push_back(gt);
  });
  return out;
}

std::vector<GroundTruth> parse_icdar2015(std::string_view text,
                                         bool language_field) {
  std::vector<GroundTruth> out;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    std::vector<std::string_view> fields;
    std::string_view rest;
    if (!split_leading_fields(line, 8, fields, rest)) {
      throw ParseError("expected 8 comma-separated quad coordinates", line_no);
    }
    std::array<Vec2, 4> quad{};
    for (std::size_t i = 0; i < 4; ++i) {
      quad[i].x = parse_number(fields[2 * i], line_no);
      quad[i].y = parse_number(fields[2 * i + 1], line_no);
    }
    if (language_field) {
      const std::size_t comma = rest.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError("expected a language field before the transcription",
                         line_no);
      }
      rest = rest.substr(comma + 1);
    }
    const std::string_view transcription = strip_quotes(trim(rest));

    GroundTruth gt;
    try {
      gt.box = min_area_rect(quad);
    } catch (const DegenerateGeometryError& e) {
      throw DegenerateGeometryError("line " + std::to_string(line_no) + ": " +
                                    e.what());
    }
    gt.ignore = transcription == "###";
    out.push_back(gt);
  });
  return out;
}

AnnotationFormat parse_format_name(std::string_view name, bool allow_mlt_alias) {
  if (name == "icdar2013") return AnnotationFormat::icdar2013;
  if (name == "icdar2015") return AnnotationFormat::icdar2015;
  if (allow_mlt_alias && (name == "icdar2017" || name == "icdar2017mlt")) {
    return AnnotationFormat::icdar2015_mlt;
  }
  throw ConfigError("unknown annotation format '" + std::string(name) + "'");
}

std::vector<GroundTruth> parse_annotation(std::string_view text,
                                          AnnotationFormat format) {
  switch (format) {
    case AnnotationFormat::icdar2013:
      return parse_icdar2013(text);
    case AnnotationFormat::icdar2015:
      return parse_icdar2015(text);
    case AnnotationFormat::icdar2015_mlt:
      return parse_icdar2015(text, /*language_field=*/true);
  }
  throw ContractError("unhandled annotation format");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read file: " + path.string());
  return std::move(buf).str();
}

std::vector<DatasetSample> load_manifest(const std::filesystem::path& path,
                                         bool allow_mlt_alias) {
  using nlohmann::json;

  const std::string text = read_text_file(path);
  const std::filesystem::path base = path.has_parent_path()
                                         ? path.parent_path()
                                         : std::filesystem::path(".");

  std::vector<DatasetSample> out;
  bool have_format = false;
  AnnotationFormat format = AnnotationFormat::icdar2013;

  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("manifest: ") + e.what(), line_no);
    }
    if (!obj.is_object()) {
      throw ParseError("manifest: each line must be a JSON object", line_no);
    }

    if (!have_format) {
      if (!obj.contains("format") || !obj["format"].is_string()) {
        throw ParseError(
            "manifest: first line must be a header {\"format\": ...}", line_no);
      }
      format = parse_format_name(obj["format"].get<std::string>(),
                                 allow_mlt_alias);
      have_format = true;
      return;
    }

    for (const char* key : {"image_id", "width", "height", "gt_path"}) {
      if (!obj.contains(key)) {
        throw ParseError("manifest: missing key '" + std::string(key) + "'",
                         line_no);
      }
    }
    if (!obj["image_id"].is_string() || !obj["gt_path"].is_string() ||
        !obj["width"].is_number_integer() || !obj["height"].is_number_integer()) {
      throw ParseError("manifest: wrong field type", line_no);
    }

    DatasetSample sample;
    sample.image_id = obj["image_id"].get<std::string>();
    sample.width = obj["width"].get<int>();
    sample.height = obj["height"].get<int>();
    if (sample.width <= 0 || sample.height <= 0) {
      throw ParseError("manifest: image size must be positive", line_no);
    }

    const std::filesystem::path gt_path = obj["gt_path"].get<std::string>();
    const std::filesystem::path resolved =
        gt_path.is_absolute() ? gt_path : base / gt_path;
    try {
      sample.gts = parse_annotation(read_text_file(resolved), format);
    } catch (const Error& e) {
      throw ParseError(resolved.string() + ": " + e.what(), line_no);
    }
    out.push_back(std::move(sample));
  });

  if (!have_format) {
    throw ParseError("manifest: missing {\"format\": ...} header line");
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const DatasetSample& a, const DatasetSample& b) {
                     return a.image_id < b.image_id;
                   });
  return out;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw NumericRangeError("cannot format value");
  return std::string(buf.data(), ptr);
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      fields.emplace_back(trim(line.substr(pos)));
      break;
    }
    fields.emplace_back(trim(line.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return fields;
}

// Reads a CSV whose header must match one of the given column lists;
// returns rows of parsed doubles plus which header variant was seen.
// Only the first `numeric` columns of a variant are parsed; trailing
// text columns (an anchor file's level name) are skipped.
struct CsvHeader {
  std::vector<std::string> columns;
  std::size_t numeric;
};

struct CsvRows {
  std::size_t variant = 0;
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> lines;  // source line of each row
};

CsvRows read_numeric_csv(const std::filesystem::path& path,
                         std::span<const CsvHeader> headers) {
  const std::string text = read_text_file(path);
  CsvRows out;
  bool have_header = false;
  std::size_t width = 0;
  std::size_t numeric = 0;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const std::vector<std::string> fields = split_csv_line(line);
    if (!have_header) {
      const auto it =
          std::find_if(headers.begin(), headers.end(),
                       [&](const CsvHeader& h) { return h.columns == fields; });
      if (it == headers.end()) {
        throw ParseError(path.string() + ": unexpected CSV header", line_no);
      }
      out.variant = static_cast<std::size_t>(it - headers.begin());
      width = it->columns.size();
      numeric = it->numeric;
      have_header = true;
      return;
    }
    if (fields.size() != width) {
      throw ParseError(path.string() + ": expected " + std::to_string(width) +
                           " fields",
                       line_no);
    }
    std::vector<double> row(numeric);
    for (std::size_t i = 0; i < numeric; ++i) {
      row[i] = parse_number(fields[i], line_no);
    }
    out.rows.push_back(std::move(row));
    out.lines.push_back(line_no);
  });
  if (!have_header) {
    throw ParseError(path.string() + ": missing CSV header");
  }
  return out;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path.string());
  return out;
}

}  // namespace

std::vector<Detection> BoxTable::to_detections() const {
  if (!has_scores) {
    throw InvalidInputError("box table has no score column");
  }
  std::vector<Detection> out;
  out.reserve(boxes.size());
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    out.push_back({boxes[i], scores[i]});
  }
  return out;
}

BoxTable read_box_csv(const std::filesystem::path& path) {
  static const std::vector<CsvHeader> headers = {
      {{"cx", "cy", "w", "h", "theta"}, 5},
      {{"cx", "cy", "w", "h", "theta", "score"}, 6},
      {{"cx", "cy", "w", "h", "theta", "level"}, 5}};
  const CsvRows rows = read_numeric_csv(path, headers);

  BoxTable out;
  out.has_scores = rows.variant == 1;
  out.boxes.reserve(rows.rows.size());
  for (std::size_t i = 0; i < rows.rows.size(); ++i) {
    const auto& r = rows.rows[i];
    try {
      out.boxes.emplace_back(r[0], r[1], r[2], r[3], r[4]);
    } catch (const Error& e) {
      throw ParseError(path.string() + ": " + e.what(), rows.lines[i]);
    }
    if (out.has_scores) out.scores.push_back(r[5]);
  }
  return out;
}

void write_box_csv(const std::filesystem::path& path,
                   std::span<const RotatedBox> boxes) {
  std::ofstream out = open_for_write(path);
  out << "cx,cy,w,h,theta\n";
  for (const auto& b : boxes) {
    out << format_double(b.cx()) << ',' << format_double(b.cy()) << ','
        << format_double(b.w()) << ',' << format_double(b.h()) << ','
        << format_double(b.theta()) << '\n';
  }
  if (!out) throw IoError("cannot write file: " + path.string());
}

void write_anchor_csv(const std::filesystem::path& path, const AnchorGrid& grid,
                      const AnchorConfig& config) {
  std::ofstream out = open_for_write(path);
  out << "cx,cy,w,h,theta,level\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid.level_index[i] >= config.levels.size()) {
      throw ContractError("anchor level index out of range for config");
    }
    const RotatedBox& b = grid.boxes[i];
    out << format_double(b.cx()) << ',' << format_double(b.cy()) << ','
        << format_double(b.w()) << ',' << format_double(b.h()) << ','
        << format_double(b.theta()) << ','
        << config.levels[grid.level_index[i]].name << '\n';
  }
  if (!out) throw IoError("cannot write file: " + path.string());
}

void write_detection_csv(const std::filesystem::path& path,
                         std::span<const Detection> dets) {
  std::ofstream out = open_for_write(path);
  out << "cx,cy,w,h,theta,score\n";
  for (const auto& d : dets) {
    out << format_double(d.box.cx()) << ',' << format_double(d.box.cy()) << ','
        << format_double(d.box.w()) << ',' << format_double(d.box.h()) << ','
        << format_double(d.box.theta()) << ',' << format_double(d.score)
        << '\n';
  }
  if (!out) throw IoError("cannot write file: " + path.string());
}

std::vector<Delta5> read_delta5_csv(const std::filesystem::path& path) {
  static const std::vector<CsvHeader> headers = {
      {{"dx", "dy", "dw", "dh", "dtheta"}, 5}};
  const CsvRows rows = read_numeric_csv(path, headers);
  std::vector<Delta5> out;
  out.reserve(rows.rows.size());
  for (const auto& r : rows.rows) {
    out.push_back({r[0], r[1], r[2], r[3], r[4]});
  }
  return out;
}

void write_delta5_csv(const std::filesystem::path& path,
                      std::span<const Delta5> deltas) {
  std::ofstream out = open_for_write(path);
  out << "dx,dy,dw,dh,dtheta\n";
  for (const auto& d : deltas) {
    out << format_double(d.dx) << ',' << format_double(d.dy) << ','
        << format_double(d.dw) << ',' << format_double(d.dh) << ','
        << format_double(d.dtheta) << '\n';
  }
  if (!out) throw IoError("cannot write file: " + path.string());
}

std::vector<double> read_score_csv(const std::filesystem::path& path) {
  static const std::vector<CsvHeader> headers = {{{"score"}, 1}};
  const CsvRows rows = read_numeric_csv(path, headers);
  std::vector<double> out;
  out.reserve(rows.rows.size());
  for (const auto& r : rows.rows) out.push_back(r[0]);
  return out;
}

std::vector<Delta3> read_delta3_csv(const std::filesystem::path& path) {
  static const std::vector<CsvHeader> headers = {
      {{"dw", "dh", "dtheta"}, 3}};
  const CsvRows rows = read_numeric_csv(path, headers);
  std::vector<Delta3> out;
  out.reserve(rows.rows.size());
  for (const auto& r : rows.rows) {
    out.push_back({r[0], r[1], r[2]});
  }
  return out;
}

void write_delta3_csv(const std::filesystem::path& path,
                      std::span<const Delta3> deltas) {
  std::ofstream out = open_for_write(path);
  out << "dw,dh,dtheta\n";
  for (const auto& d : deltas) {
    out << format_double(d.dw) << ',' << format_double(d.dh) << ','
        << format_double(d.dtheta) << '\n';
  }
  if (!out) throw IoError("cannot write file: " + path.string());
}

namespace {

AnchorConfig parse_json_anchor_config(const std::filesystem::path& path,
                                      const std::string& text) {
  using nlohmann::json;

  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  if (!obj.is_object()) {
    throw ConfigError(path.string() + ": anchor config must be a JSON object");
  }

  AnchorConfig cfg;
  if (obj.contains("num_scales") || obj.contains("num_ratios")) {
    cfg = AnchorConfig::with_grid(obj.value("num_scales", 1),
                                  obj.value("num_ratios", 1));
  }
  if (obj.contains("levels")) {
    cfg.levels.clear();
    for (const auto& lv : obj["levels"]) {
      cfg.levels.push_back({lv.at("name").get<std::string>(),
                            lv.at("stride").get<double>(),
                            lv.at("base_size").get<double>()});
    }
  }
  if (obj.contains("scales")) {
    cfg.scales = obj["scales"].get<std::vector<double>>();
  }
  if (obj.contains("ratios")) {
    cfg.ratios = obj["ratios"].get<std::vector<double>>();
  }
  if (obj.contains("center_offset")) {
    cfg.center_offset = obj["center_offset"].get<double>();
  }
  return cfg;
}

// Splits a list value on commas and runs of blanks.
std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> items;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           (text[i] == ',' || text[i] == ' ' || text[i] == '\t')) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && text[j] != ' ' &&
           text[j] != '\t') {
      ++j;
    }
    if (j > i) items.push_back(text.substr(i, j - i));
    i = j;
  }
  return items;
}

AnchorConfig parse_plain_anchor_config(const std::filesystem::path& path,
                                       std::string_view text) {
  const auto number = [&](std::string_view field, std::size_t line_no) {
    field = trim(field);
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ParseError(
          path.string() + ": bad number '" + std::string(field) + "'", line_no);
    }
    return value;
  };

  std::optional<int> num_scales;
  std::optional<int> num_ratios;
  std::vector<AnchorLevel> levels;
  std::vector<double> scales;
  std::vector<double> ratios;
  std::optional<double> center_offset;

  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) return;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(path.string() + ": expected 'key = value'", line_no);
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "num_scales") {
      num_scales = static_cast<int>(number(value, line_no));
    } else if (key == "num_ratios") {
      num_ratios = static_cast<int>(number(value, line_no));
    } else if (key == "levels") {
      for (const std::string_view item : split_list(value)) {
        const std::size_t c1 = item.find(':');
        const std::size_t c2 =
            c1 == std::string_view::npos ? c1 : item.find(':', c1 + 1);
        if (c2 == std::string_view::npos) {
          throw ParseError(
              path.string() + ": level entries are name:stride:base_size",
              line_no);
        }
        levels.push_back({std::string(item.substr(0, c1)),
                          number(item.substr(c1 + 1, c2 - c1 - 1), line_no),
                          number(item.substr(c2 + 1), line_no)});
      }
    } else if (key == "scales" || key == "ratios") {
      auto& dst = key == "scales" ? scales : ratios;
      for (const std::string_view item : split_list(value)) {
        dst.push_back(number(item, line_no));
      }
    } else if (key == "center_offset") {
      center_offset = number(value, line_no);
    } else {
      throw ConfigError(path.string() + ": unknown anchor config key '" + key +
                        "'");
    }
  });

  AnchorConfig cfg;
  if (num_scales || num_ratios) {
    cfg = AnchorConfig::with_grid(num_scales.value_or(1),
                                  num_ratios.value_or(1));
  }
  if (!levels.empty()) cfg.levels = std::move(levels);
  if (!scales.empty()) cfg.scales = std::move(scales);
  if (!ratios.empty()) cfg.ratios = std::move(ratios);
  if (center_offset) cfg.center_offset = *center_offset;
  return cfg;
}

}  // namespace

void save_anchor_config(const std::filesystem::path& path,
                        const AnchorConfig& config) {
  config.validate();
  for (const auto& lv : config.levels) {
    if (lv.name.empty() ||
        lv.name.find_first_of(" \t,:=#") != std::string::npos) {
      throw ConfigError("level name '" + lv.name + "' cannot be serialized");
    }
  }

  std::ofstream out = open_for_write(path);
  out << "levels =";
  for (const auto& lv : config.levels) {
    out << ' ' << lv.name << ':' << format_double(lv.stride) << ':'
        << format_double(lv.base_size);
  }
  out << "\nscales =";
  for (const double s : config.scales) out << ' ' << format_double(s);
  out << "\nratios =";
  for (const double r : config.ratios) out << ' ' << format_double(r);
  out << "\ncenter_offset = " << format_double(config.center_offset) << '\n';
  if (!out) throw IoError("cannot write file: " + path.string());
}

AnchorConfig load_anchor_config(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const std::string_view body = strip_bom(text);
  const std::size_t first = body.find_first_not_of(" \t\r\n");
  const bool is_json = first != std::string_view::npos &&
                       (body[first] == '{' || body[first] == '[');
  AnchorConfig cfg = is_json ? parse_json_anchor_config(path, text)
                             : parse_plain_anchor_config(path, text);
  cfg.validate();
  return cfg;
}

}  // namespace rotext
