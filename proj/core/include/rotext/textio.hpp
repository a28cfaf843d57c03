// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rotext/anchors.hpp"
#include "rotext/coding.hpp"
#include "rotext/geometry.hpp"
#include "rotext/ground_truth.hpp"
#include "rotext/postprocess.hpp"

namespace rotext {

struct DatasetSample {
  std::string image_id;
  int width = 0;   // pixels, from the manifest; images are never read
  int height = 0;
  std::vector<GroundTruth> gts;
};

enum class SeparatorMode { auto_detect, comma, whitespace };

/// One axis-aligned box per line: "left,top,right,bottom,transcription",
/// comma- or whitespace-separated (auto-detected per line unless pinned).
/// Transcription "###" marks an ignore region. Blank lines are skipped;
/// CRLF and a UTF-8 BOM are tolerated.
std::vector<GroundTruth> parse_icdar2013(
    std::string_view text, SeparatorMode sep = SeparatorMode::auto_detect);

/// One quadrilateral per line: "x1,y1,...,x4,y4,transcription"; each quad
/// becomes the canonical minimum-area enclosing rectangle of its corners.
/// With language_field, a language column sits before the transcription
/// (the 2017 MLT layout) and is ignored.
std::vector<GroundTruth> parse_icdar2015(std::string_view text,
                                         bool language_field = false);

enum class AnnotationFormat { icdar2013, icdar2015, icdar2015_mlt };

/// Maps "icdar2013"/"icdar2015" to the matching format. "icdar2017" is
/// accepted as an alias for the MLT quad layout only when allow_mlt_alias
/// is set; anything else is a config error.
AnnotationFormat parse_format_name(std::string_view name,
                                   bool allow_mlt_alias = false);

std::vector<GroundTruth> parse_annotation(std::string_view text,
                                          AnnotationFormat format);

/// JSON-lines manifest. The first line is a header {"format": ...}; each
/// following line is {"image_id", "width", "height", "gt_path"} with
/// gt_path resolved against the manifest's directory. Samples come back
/// sorted by image_id.
std::vector<DatasetSample> load_manifest(const std::filesystem::path& path,
                                         bool allow_mlt_alias = false);

/// Boxes plus an optional score column, as read from one CSV file.
struct BoxTable {
  std::vector<RotatedBox> boxes;
  std::vector<double> scores;  // empty or one per box
  bool has_scores = false;

  std::vector<Detection> to_detections() const;
};

/// CSV with header "cx,cy,w,h,theta" or "cx,cy,w,h,theta,score";
/// angles in radians. A trailing "level" column, as written for anchor
/// grids, is accepted and skipped.
BoxTable read_box_csv(const std::filesystem::path& path);

void write_box_csv(const std::filesystem::path& path,
                   std::span<const RotatedBox> boxes);

/// Grid rows as "cx,cy,w,h,theta,level", the last column holding the
/// pyramid level's name from the generating config.
void write_anchor_csv(const std::filesystem::path& path, const AnchorGrid& grid,
                      const AnchorConfig& config);
void write_detection_csv(const std::filesystem::path& path,
                         std::span<const Detection> dets);

/// CSV with header "dx,dy,dw,dh,dtheta".
std::vector<Delta5> read_delta5_csv(const std::filesystem::path& path);
void write_delta5_csv(const std::filesystem::path& path,
                      std::span<const Delta5> deltas);

/// Single-column CSV with header "score", one value per anchor.
std::vector<double> read_score_csv(const std::filesystem::path& path);

/// CSV with header "dw,dh,dtheta".
std::vector<Delta3> read_delta3_csv(const std::filesystem::path& path);
void write_delta3_csv(const std::filesystem::path& path,
                      std::span<const Delta3> deltas);

/// Anchor-layout description, either "key = value" lines or a JSON
/// object (files opening with '{'). Keys are optional: "levels" (JSON
/// objects {"name", "stride", "base_size"}, or name:stride:base_size
/// triples in the plain form), "scales", "ratios", "center_offset", or
/// the shorthand "num_scales"/"num_ratios" counts (explicit arrays win
/// over the shorthand). Plain-form lists separate entries with commas
/// or spaces; '#' starts a comment.
AnchorConfig load_anchor_config(const std::filesystem::path& path);

/// Writes the "key = value" form; load_anchor_config reads it back
/// exactly. Level names must be free of blanks and of ',', ':', '=', '#'.
void save_anchor_config(const std::filesystem::path& path,
                        const AnchorConfig& config);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace rotext
