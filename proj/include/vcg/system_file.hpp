#pragma once

// Directed systems read from JSON:
//
//   {
//     "index":  "chain"  or  [["a", "b"], ["a", "c"], ...],
//     "stages": [{"name": "a", "group": "C2"}, ...],
//     "maps":   [{"from": "a", "to": "b", "images": ["a", "b^2"]}, ...]
//   }
//
// "chain" orders the stages as listed. A group is any spec accepted by
// load_group_json; file paths are relative to the system file. images[i] is a word in the generators of the target
// for the i-th generator of the source. Maps are needed on the covering
// pairs; the others are composed.

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vcg/catalog.hpp"
#include "vcg/colimit.hpp"
#include "vcg/error.hpp"
#include "vcg/finite_group.hpp"
#include "vcg/group_io.hpp"
#include "vcg/word.hpp"

namespace vcg {

  // The homomorphism sending the i-th generator of src to the word
  // images[i] in the generators of tgt.
  inline Homomorphism map_from_images(PresentedGroup const&           src,
                                      PresentedGroup const&           tgt,
                                      std::vector<std::string> const& images) {
    auto const label = (src.name.empty() ? "source" : src.name) + " -> "
                       + (tgt.name.empty() ? "target" : tgt.name);
    if (images.size() != src.generator_elements.size()) {
      throw InvalidInput("map " + label + " needs one image per generator");
    }
    auto const&           tg = tgt.presentation.generators();
    std::set<std::string> known(tg.begin(), tg.end());
    std::vector<Element>  img;
    for (auto const& w : images) {
      img.push_back(tgt.evaluate(parse_word(w, &known)));
    }
    auto h = Homomorphism::try_from_generators(src.group, tgt.group,
                                               src.generator_elements, img);
    if (!h) {
      throw InvalidInput("images for " + label + " do not define a homomorphism");
    }
    return std::move(*h);
  }

  struct SystemFile {
    std::vector<PresentedGroup> stages;
    DirectedSystem              system;
    bool                        chain = false;
  };

  inline SystemFile load_system_json(nlohmann::json const& doc, std::string const& base = "") {
    SystemFile out;
    try {
      if (!doc.is_object()) {
        throw InvalidInput("system file: expected an object");
      }
      std::vector<std::string> names;
      for (auto const& s : doc.at("stages")) {
        auto const name = s.at("name").get<std::string>();
        names.push_back(name);
        out.stages.push_back(load_group_json(s.at("group"), name, base));
      }
      if (names.empty()) {
        throw InvalidInput("system file: no stages");
      }
      auto index_of = [&](std::string const& n) {
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (names[i] == n) {
            return i;
          }
        }
        throw InvalidInput("system file: unknown stage " + n);
      };
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      auto const& index = doc.at("index");
      if (index.is_string()) {
        if (index.get<std::string>() != "chain") {
          throw InvalidInput("system file: index must be \"chain\" or a list of pairs");
        }
        out.chain = true;
        for (std::size_t i = 0; i + 1 < names.size(); ++i) {
          rel.emplace_back(i, i + 1);
        }
      } else {
        for (auto const& p : index) {
          if (!p.is_array() || p.size() != 2) {
            throw InvalidInput("system file: index pairs have two entries");
          }
          rel.emplace_back(index_of(p[0].get<std::string>()),
                           index_of(p[1].get<std::string>()));
        }
      }
      std::vector<FiniteGroup> groups;
      for (auto const& s : out.stages) {
        groups.push_back(s.group);
      }
      out.system = DirectedSystem(std::move(groups), rel, names);
      if (doc.contains("maps")) {
        for (auto const& m : doc.at("maps")) {
          auto const i      = index_of(m.at("from").get<std::string>());
          auto const j      = index_of(m.at("to").get<std::string>());
          auto const images = m.at("images").get<std::vector<std::string>>();
          auto h = map_from_images(out.stages[i], out.stages[j], images);
          out.system.set_map(i, j, std::move(h));
        }
      }
    } catch (nlohmann::json::exception const& e) {
      throw InvalidInput(std::string("system file: ") + e.what());
    }
    return out;
  }

  inline SystemFile load_system_file(std::string const& path) {
    return load_system_json(detail::read_json_file(path),
                            std::filesystem::path(path).parent_path().string());
  }

}  // namespace vcg
