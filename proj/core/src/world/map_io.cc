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

#include "uvbot/world/map_io.h"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "uvbot/common/error.h"

namespace uvbot {
namespace {

// Shortest decimal text that reads back to the same double.
std::string ShortestDecimal(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

// Skips whitespace and '#' comments between PGM header tokens.
void SkipSeparators(std::istream& in) {
  while (true) {
    const int c = in.peek();
    if (c == '#') {
      std::string discard;
      std::getline(in, discard);
    } else if (c != EOF && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

int ReadHeaderInt(std::istream& in, const char* what) {
  SkipSeparators(in);
  int value = 0;
  if (!(in >> value)) {
    throw Error(ErrorCode::kMalformedHeader,
                std::string("PGM header: cannot read ") + what);
  }
  return value;
}

double ReadDouble(const YAML::Node& node, const char* key) {
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    throw Error(ErrorCode::kMalformedMetadata,
                std::string("map metadata: '") + key + "' is not a number");
  }
}

}  // namespace

GrayImage ReadPgm(std::istream& in) {
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '5') {
    throw Error(ErrorCode::kMalformedHeader, "PGM header: expected magic P5");
  }
  GrayImage image;
  image.width = ReadHeaderInt(in, "width");
  image.height = ReadHeaderInt(in, "height");
  const int maxval = ReadHeaderInt(in, "maxval");
  if (image.width <= 0 || image.height <= 0) {
    throw Error(ErrorCode::kMalformedHeader, "PGM header: non-positive size");
  }
  if (maxval <= 0 || maxval > 255) {
    throw Error(ErrorCode::kMalformedHeader,
                "PGM header: maxval must be in [1, 255]");
  }
  // Exactly one whitespace byte separates the header from the raster.
  const int sep = in.get();
  if (sep == EOF || !std::isspace(sep)) {
    throw Error(ErrorCode::kMalformedHeader, "PGM header: missing separator");
  }
  const std::size_t expected =
      static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height);
  image.pixels.resize(expected);
  in.read(reinterpret_cast<char*>(image.pixels.data()),
          static_cast<std::streamsize>(expected));
  if (static_cast<std::size_t>(in.gcount()) != expected) {
    throw Error(ErrorCode::kDimensionMismatch,
                "PGM raster has " + std::to_string(in.gcount()) +
                    " bytes, header declares " + std::to_string(expected));
  }
  if (in.peek() != EOF) {
    throw Error(ErrorCode::kDimensionMismatch,
                "PGM raster is longer than the header declares");
  }
  if (maxval != 255) {
    for (auto& p : image.pixels) {
      p = static_cast<std::uint8_t>(std::min(255, p * 255 / maxval));
    }
  }
  return image;
}

GrayImage ReadPgmFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  return ReadPgm(in);
}

void WritePgm(std::ostream& out, const GrayImage& image) {
  out << "P5\n" << image.width << " " << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
}

void WritePgmFile(const std::filesystem::path& path, const GrayImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
  WritePgm(out, image);
}

MapMetadata ParseMapMetadata(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw Error(ErrorCode::kMalformedMetadata,
                "map metadata: line " + std::to_string(e.mark.line + 1) + ": " +
                    e.msg);
  }
  if (!root.IsMap()) {
    throw Error(ErrorCode::kMalformedMetadata, "map metadata: expected key: value pairs");
  }
  MapMetadata meta;
  if (root["image"]) meta.image = root["image"].as<std::string>();
  if (!root["resolution"]) {
    throw Error(ErrorCode::kMalformedMetadata, "map metadata: missing 'resolution'");
  }
  meta.resolution = ReadDouble(root["resolution"], "resolution");
  if (!(meta.resolution > 0.0)) {
    throw Error(ErrorCode::kNonPositiveResolution,
                "map metadata: resolution must be positive");
  }
  if (const auto origin = root["origin"]) {
    if (!origin.IsSequence() || origin.size() < 2 || origin.size() > 3) {
      throw Error(ErrorCode::kMalformedMetadata,
                  "map metadata: origin must be [x, y, theta]");
    }
    meta.origin.x = ReadDouble(origin[0], "origin");
    meta.origin.y = ReadDouble(origin[1], "origin");
    if (origin.size() == 3) meta.origin.theta = NormalizeAngle(ReadDouble(origin[2], "origin"));
  }
  if (root["occupied_thresh"]) {
    meta.occupied_thresh = ReadDouble(root["occupied_thresh"], "occupied_thresh");
  }
  if (root["free_thresh"]) {
    meta.free_thresh = ReadDouble(root["free_thresh"], "free_thresh");
  }
  if (root["negate"]) {
    const auto& n = root["negate"];
    try {
      meta.negate = n.as<int>() != 0;
    } catch (const YAML::Exception&) {
      try {
        meta.negate = n.as<bool>();
      } catch (const YAML::Exception&) {
        throw Error(ErrorCode::kMalformedMetadata, "map metadata: bad 'negate'");
      }
    }
  }
  if (meta.free_thresh > meta.occupied_thresh) {
    throw Error(ErrorCode::kMalformedMetadata,
                "map metadata: free_thresh exceeds occupied_thresh");
  }
  return meta;
}

MapMetadata LoadMapMetadata(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseMapMetadata(buffer.str());
}

OccupancyGrid GridFromImage(const GrayImage& image, const MapMetadata& meta) {
  OccupancyGrid grid(image.width, image.height, meta.resolution, meta.origin);
  for (int r = 0; r < image.height; ++r) {
    const int row = image.height - 1 - r;
    for (int col = 0; col < image.width; ++col) {
      const double v = image.at(col, r) / 255.0;
      const double p = meta.negate ? v : 1.0 - v;
      Occupancy occ = Occupancy::kUnknown;
      if (p >= meta.occupied_thresh) {
        occ = Occupancy::kOccupied;
      } else if (p <= meta.free_thresh) {
        occ = Occupancy::kFree;
      }
      grid.set({col, row}, occ);
    }
  }
  return grid;
}

OccupancyGrid LoadMap(const std::filesystem::path& pgm_path,
                      const std::filesystem::path& meta_path) {
  const MapMetadata meta = LoadMapMetadata(meta_path);
  return GridFromImage(ReadPgmFile(pgm_path), meta);
}

OccupancyGrid LoadMap(const std::filesystem::path& meta_path) {
  const MapMetadata meta = LoadMapMetadata(meta_path);
  if (meta.image.empty()) {
    throw Error(ErrorCode::kMalformedMetadata,
                "map metadata: missing 'image' in " + meta_path.string());
  }
  std::filesystem::path image = meta.image;
  if (image.is_relative()) image = meta_path.parent_path() / image;
  return GridFromImage(ReadPgmFile(image), meta);
}

GrayImage RenderGrid(const OccupancyGrid& grid) {
  GrayImage image{grid.width(), grid.height(), {}};
  image.pixels.resize(grid.size());
  for (int row = 0; row < grid.height(); ++row) {
    const int r = grid.height() - 1 - row;
    for (int col = 0; col < grid.width(); ++col) {
      std::uint8_t v = 205;
      switch (grid.at({col, row})) {
        case Occupancy::kFree: v = 254; break;
        case Occupancy::kOccupied: v = 0; break;
        case Occupancy::kUnknown: v = 205; break;
      }
      image.pixels[static_cast<std::size_t>(r) * grid.width() + col] = v;
    }
  }
  return image;
}

void SaveMap(const OccupancyGrid& grid, const std::filesystem::path& meta_path) {
  std::filesystem::path pgm = meta_path;
  pgm.replace_extension(".pgm");
  WritePgmFile(pgm, RenderGrid(grid));
  std::ofstream out(meta_path);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + meta_path.string());
  }
  out << "image: " << pgm.filename().string() << "\n"
      << "resolution: " << ShortestDecimal(grid.resolution()) << "\n"
      << "origin: [" << ShortestDecimal(grid.origin().x) << ", "
      << ShortestDecimal(grid.origin().y) << ", " << ShortestDecimal(grid.origin().theta)
      << "]\n"
      << "negate: 0\n"
      << "occupied_thresh: 0.65\n"
      << "free_thresh: 0.196\n";
}

}  // namespace uvbot
