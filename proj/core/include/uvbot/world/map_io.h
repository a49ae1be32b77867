// Copyright 2026 The uvbot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Map ingestion in the usual map-server layout: a binary PGM image plus a
// small YAML file with resolution, origin and thresholds.

#ifndef UVBOT_WORLD_MAP_IO_H_
#define UVBOT_WORLD_MAP_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "uvbot/world/occupancy_grid.h"

namespace uvbot {

// 8-bit grayscale raster, row 0 at the top.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int col, int row) const {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }
};

struct MapMetadata {
  std::string image;
  double resolution = 0.05;
  Pose2D origin{};
  double occupied_thresh = 0.65;
  double free_thresh = 0.196;
  bool negate = false;
};

// Reads a binary (P5) PGM. Throws Error(kMalformedHeader) for a bad header
// and Error(kDimensionMismatch) when the pixel payload does not match it.
GrayImage ReadPgm(std::istream& in);
GrayImage ReadPgmFile(const std::filesystem::path& path);
void WritePgm(std::ostream& out, const GrayImage& image);
void WritePgmFile(const std::filesystem::path& path, const GrayImage& image);

// Throws Error(kMalformedMetadata) or Error(kNonPositiveResolution).
MapMetadata ParseMapMetadata(const std::string& text);
MapMetadata LoadMapMetadata(const std::filesystem::path& path);

// Occupancy probability p = 1 - v/255 (or v/255 when negated): p >=
// occupied_thresh is Occupied, p <= free_thresh is Free, otherwise Unknown.
// Image row 0 becomes the top (max-y) grid row.
OccupancyGrid GridFromImage(const GrayImage& image, const MapMetadata& meta);

OccupancyGrid LoadMap(const std::filesystem::path& pgm_path,
                      const std::filesystem::path& meta_path);
// Resolves the `image` key relative to the metadata file.
OccupancyGrid LoadMap(const std::filesystem::path& meta_path);

// Free 254, Occupied 0, Unknown 205.
GrayImage RenderGrid(const OccupancyGrid& grid);
// Writes `<stem>.pgm` and `<stem>.yaml` next to each other.
void SaveMap(const OccupancyGrid& grid, const std::filesystem::path& meta_path);

}  // namespace uvbot

#endif  // UVBOT_WORLD_MAP_IO_H_
