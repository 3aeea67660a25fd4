#include "cotv_cli/datasets.hpp"

namespace cotv::cli {

namespace {

Json cell(const std::string& id, Json vertices, Json rays = Json::array()) {
  return Json{{"id", id}, {"vertices", std::move(vertices)}, {"rays", std::move(rays)}};
}

Json cone(const std::string& id, Json rays) { return Json{{"id", id}, {"rays", std::move(rays)}}; }

Json datum(const std::string& point, const std::string& id, long slope, long translation) {
  return Json{{"point", point}, {"cell", id}, {"slope", {slope}}, {"translation", translation}};
}

Json rec(const std::string& id, long slope) { return Json{{"cone", id}, {"slope", {slope}}}; }

Json line_fan() {
  return Json{{"cones", {cone("tau0", {{-1}}), cone("zero", Json::array()), cone("tau1", {{1}})}}};
}

// Slices of the Hirzebruch surface F_2 over 0 and infinity.
Json hirzebruch_slices() {
  return Json::array({
      {{"point", "0"},
       {"cells",
        {cell("F0_left", {{"-1/2"}}, {{-1}}), cell("F0_mid", {{"-1/2"}, {0}}), cell("F0_right", {{0}}, {{1}}),
         cell("v0_-1/2", {{"-1/2"}}), cell("v0_0", {{0}})}}},
      {{"point", "inf"},
       {"cells", {cell("Finf_left", {{0}}, {{-1}}), cell("Finf_right", {{0}}, {{1}}), cell("vinf_0", {{0}})}}},
  });
}

Json hirzebruch_h() {
  return Json{{"name", "h"},
              {"cells",
               {datum("0", "F0_left", 3, 1), datum("0", "F0_mid", 1, 0), datum("0", "F0_right", 0, 0),
                datum("inf", "Finf_left", 3, -1), datum("inf", "Finf_right", 0, -1)}},
              {"recession", {rec("tau0", 3), rec("tau1", 0)}}};
}

Json fundamental(const std::vector<std::pair<std::string, std::string>>& cells) {
  Json values = Json::array();
  for (const auto& [p, c] : cells) values.push_back({{"kind", "vertical"}, {"point", p}, {"cell", c}, {"value", 1}});
  return Json{{"name", "cX"}, {"codim", 0}, {"values", std::move(values)}};
}

const std::vector<std::pair<std::string, std::string>> kHirzebruchMaximal{
    {"0", "F0_left"}, {"0", "F0_mid"}, {"0", "F0_right"}, {"inf", "Finf_left"}, {"inf", "Finf_right"}};

Json hirzebruch2() {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["lattice_rank"] = 1;
  j["marked_points"] = {"0", "inf"};
  j["slices"] = hirzebruch_slices();
  j["recession_fan"] = line_fan();
  Json sfu{{"name", "sfu"},
           {"cells",
            {datum("0", "F0_left", 1, 0), datum("0", "F0_mid", 1, 0), datum("0", "F0_right", 1, 0),
             datum("inf", "Finf_left", 1, 0), datum("inf", "Finf_right", 1, 0)}},
           {"recession", {rec("tau0", 1), rec("tau1", 1)}}};
  j["support_functions"] = {hirzebruch_h(), sfu};
  Json c1{{"name", "c1"},
          {"codim", 1},
          {"values",
           {{{"kind", "vertical"}, {"point", "0"}, {"cell", "v0_-1/2"}, {"value", 1}},
            {{"kind", "vertical"}, {"point", "0"}, {"cell", "v0_0"}, {"value", 1}},
            {{"kind", "vertical"}, {"point", "inf"}, {"cell", "vinf_0"}, {"value", 3}},
            {{"kind", "horizontal"}, {"cone", "tau1"}, {"value", 3}},
            {{"kind", "horizontal"}, {"cone", "tau0"}, {"value", 2}}}}};
  j["weights"] = {c1, fundamental(kHirzebruchMaximal)};
  return j;
}

// A rank-one fan over three points with bounded cells in two slices.
Json three_point() {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["lattice_rank"] = 1;
  j["marked_points"] = {"0", "1", "inf"};
  j["slices"] = Json::array({
      {{"point", "0"},
       {"cells", {cell("A_left", {{0}}, {{-1}}), cell("A_mid", {{0}, {"1/2"}}), cell("A_right", {{"1/2"}}, {{1}})}}},
      {{"point", "1"},
       {"cells", {cell("B_left", {{"-1/3"}}, {{-1}}), cell("B_mid", {{"-1/3"}, {1}}), cell("B_right", {{1}}, {{1}})}}},
      {{"point", "inf"}, {"cells", {cell("C_left", {{0}}, {{-1}}), cell("C_right", {{0}}, {{1}})}}},
  });
  j["recession_fan"] = line_fan();
  j["support_functions"] = {
      {{"name", "h"},
       {"cells",
        {datum("0", "A_left", 1, 0), datum("0", "A_mid", 1, 0), datum("0", "A_right", -1, 1),
         datum("1", "B_left", 1, 0), datum("1", "B_mid", -2, -1), datum("1", "B_right", -1, -2),
         datum("inf", "C_left", 1, 2), datum("inf", "C_right", -1, 2)}},
       {"recession", {rec("tau0", 1), rec("tau1", -1)}}}};
  j["weights"] = {fundamental({{"0", "A_left"},
                               {"0", "A_mid"},
                               {"0", "A_right"},
                               {"1", "B_left"},
                               {"1", "B_mid"},
                               {"1", "B_right"},
                               {"inf", "C_left"},
                               {"inf", "C_right"}})};
  return j;
}

// The Hirzebruch slices with the ray tau1 marked: the pairing is unsupported.
Json marked_cone() {
  Json j = hirzebruch2();
  j["marked_cones"] = {"tau1"};
  j["stabilizers"] = {{"tau1", 1}};
  j["support_functions"] = {hirzebruch_h()};
  Json cx = fundamental({{"0", "F0_left"}, {"0", "F0_mid"}, {"inf", "Finf_left"}});
  cx["values"].push_back({{"kind", "contracted"}, {"cone", "tau1"}, {"value", 1}});
  j["weights"] = {cx};
  return j;
}

}  // namespace

std::vector<std::string> dataset_names() { return {"hirzebruch2", "three-point", "marked-cone"}; }

Json dataset_json(const std::string& name) {
  if (name == "hirzebruch2") return hirzebruch2();
  if (name == "three-point") return three_point();
  if (name == "marked-cone") return marked_cone();
  throw ParseError("unknown dataset \"" + name + "\"");
}

}  // namespace cotv::cli
