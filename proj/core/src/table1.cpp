#include "primeconst/table1.hpp"

#include <array>

namespace primeconst {

namespace {

constexpr std::array<Table1Row, 30> kRows = {{
    {1, "2.9200509773161347121", "1.2148208055243337469", 2},
    {2, "3.8401019546322694242", "2.4296416110486674939", 3},
    {3, "5.5203058638968082726", "4.2889248331460024817", 5},
    {4, "7.6015293194840413628", "6.4446241657300124084", 7},
    {5, "11.210705236388289539", "10.112369160110086858", 11},
    {6, "13.317757600271184934", "12.236060761210955443", 13},
    {7, "17.130848803525404140", "16.068789895742420762", 17},
    {8, "19.224429659931870374", "18.169428227621152959", 19},
    {9, "23.264163538705537112", "22.219136324801906220", 23},
    {10, "29.075761390227353567", "28.040135470443843060", 29},
    {11, "31.197080316593253438", "30.163928642871448728", 31},
    {12, "37.109489814390856584", "36.081787929014910553", 37},
    {13, "41.051123132461693602", "40.026153373551690464", 41},
    {14, "43.096048430929437699", "42.072288315619309040", 43},
    {15, "47.130082529965821066", "46.108397571630288701", 47},
    {16, "53.113878908393590122", "52.094685866623568934", 53},
    {17, "59.035582144860276459", "58.018350931049153499", 59},
    {18, "61.099346546756311072", "60.082704931900056448", 61},
    {19, "67.060139352134975368", "66.045000845903443346", 67},
    {20, "71.029336593043349634", "70.015056675530704168", 71},
    {21, "73.082898106077823987", "72.069023962679995960", 73},
    {22, "79.051561743681151056", "78.038749275639705081", 79},
    {23, "83.073377750810933402", "82.061192775536701425", 83},
    {24, "89.090353317307472383", "88.079000369546218254", 89},
    {25, "97.041445240365042099", "96.031032889613424636", 97},
    {26, "101.02018831540908365", "100.01019029250218968", 101},
    {27, "103.03901985631744826", "102.02921954272115718", 103},
    {28, "107.01904520069717032", "106.00961290027918966", 107},
    {29, "109.03783647459722466", "108.02858032987329405", 109},
    {30, "113.12417573109748793", "112.11525595618905130", 113},
}};

}  // namespace

std::span<const Table1Row> table1_rows() {
    return kRows;
}

}  // namespace primeconst
