// Copyright epoch-sim contributors.
// SPDX-License-Identifier: Apache-2.0

#include "epoch/cli/builtin_fixtures.hpp"

namespace epoch::cli {

const char* const kDemoGeometryText = R"fixture(# demo device floorplan
idcode = 0x03727093
rows_top = 1
rows_bottom = 2
slcr_unlock_key = 0x0000DF0D
min_interframe_gap_us = 0.5
freeze_port_hz = 100000000
column = CLB 36
column = CLB 36
column = CLB 36
column = BRAM 128
column = CLB 36
column = DSP 28
column = CLB 36
column = CLB 36
column = CLB 36
)fixture";

const char* const kDemoCellMapText = R"fixture(# demo cell map: five slots, frame-disjoint
Bit 0 0x0042011E 12 5 Block=SLICE_X2Y1 Kind=FF Net=up/q[0] Slot=slot0
Bit 1 0x0042011E 12 6 Block=SLICE_X2Y1 Kind=FF Net=up/q[1] Slot=slot0
Bit 2 0x0042011E 12 7 Block=SLICE_X2Y1 Kind=FF Net=up/q[2] Slot=slot0
Bit 3 0x0042011E 12 8 Block=SLICE_X2Y1 Kind=FF Net=up/q[3] Slot=slot0
Bit 4 0x0042021E 12 5 Block=SLICE_X4Y1 Kind=FF Net=down/q[0] Slot=slot1
Bit 5 0x0042021E 12 6 Block=SLICE_X4Y1 Kind=FF Net=down/q[1] Slot=slot1
Bit 6 0x0042021E 12 7 Block=SLICE_X4Y1 Kind=FF Net=down/q[2] Slot=slot1
Bit 7 0x0042021E 12 8 Block=SLICE_X4Y1 Kind=FF Net=down/q[3] Slot=slot1
Bit 8 0x0042031E 20 0 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[0] Slot=slot2
Bit 9 0x0042031E 20 1 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[1] Slot=slot2
Bit 10 0x0042031E 20 2 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[2] Slot=slot2
Bit 11 0x0042031E 20 3 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[3] Slot=slot2
Bit 12 0x0042031E 20 4 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[4] Slot=slot2
Bit 13 0x0042031E 20 5 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[5] Slot=slot2
Bit 14 0x0042031E 20 6 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[6] Slot=slot2
Bit 15 0x0042031E 20 7 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[7] Slot=slot2
Bit 16 0x0042031E 20 8 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[8] Slot=slot2
Bit 17 0x0042031E 20 9 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[9] Slot=slot2
Bit 18 0x0042031E 20 10 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[10] Slot=slot2
Bit 19 0x0042031E 20 11 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[11] Slot=slot2
Bit 20 0x0042031E 20 12 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[12] Slot=slot2
Bit 21 0x0042031E 20 13 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[13] Slot=slot2
Bit 22 0x0042031E 20 14 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[14] Slot=slot2
Bit 23 0x0042031E 20 15 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[15] Slot=slot2
Bit 24 0x0042031E 21 0 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[16] Slot=slot2
Bit 25 0x0042031E 21 1 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[17] Slot=slot2
Bit 26 0x0042031E 21 2 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[18] Slot=slot2
Bit 27 0x0042031E 21 3 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[19] Slot=slot2
Bit 28 0x0042031E 21 4 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[20] Slot=slot2
Bit 29 0x0042031E 21 5 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[21] Slot=slot2
Bit 30 0x0042031E 21 6 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[22] Slot=slot2
Bit 31 0x0042031E 21 7 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[23] Slot=slot2
Bit 32 0x0042031E 21 8 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[24] Slot=slot2
Bit 33 0x0042031E 21 9 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[25] Slot=slot2
Bit 34 0x0042031E 21 10 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[26] Slot=slot2
Bit 35 0x0042031E 21 11 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[27] Slot=slot2
Bit 36 0x0042031E 21 12 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[28] Slot=slot2
Bit 37 0x0042031E 21 13 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[29] Slot=slot2
Bit 38 0x0042031E 21 14 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[30] Slot=slot2
Bit 39 0x0042031E 21 15 Block=SLICE_X6Y1 Kind=FF Net=chain/digest[31] Slot=slot2
Bit 40 0x00C20180 0 0 Block=RAMB36_X0Y1 Kind=BRAM Net=chain/mem[0] Slot=slot2
Bit 41 0x00C20180 1 0 Block=RAMB36_X0Y1 Kind=BRAM Net=chain/mem[1] Slot=slot2
Bit 42 0x00420280 30 0 Block=DSP48_X0Y1 Kind=DSP Net=chain/acc Slot=slot2
Bit 43 0x0042039E 40 0 Block=SLICE_X7Y1 Kind=FF Net=lfsr/q[0] Slot=slot3
Bit 44 0x0042039E 40 1 Block=SLICE_X7Y1 Kind=FF Net=lfsr/q[1] Slot=slot3
Bit 45 0x0042039E 40 2 Block=SLICE_X7Y1 Kind=FF Net=lfsr/q[2] Slot=slot3
Bit 46 0x0042039E 40 3 Block=SLICE_X7Y1 Kind=FF Net=lfsr/q[3] Slot=slot3
Bit 47 0x0042039E 40 4 Block=SLICE_X7Y1 Kind=FF Net=lfsr/q[4] Slot=slot3
Bit 48 0x0042039E 40 5 Block=SLICE_X7Y1 Kind=FF Net=lfsr/q[5] Slot=slot3
Bit 49 0x0042039E 40 6 Block=SLICE_X7Y1 Kind=FF Net=lfsr/q[6] Slot=slot3
Bit 50 0x0042039E 40 7 Block=SLICE_X7Y1 Kind=FF Net=lfsr/q[7] Slot=slot3
Bit 51 0x004203A0 60 0 Block=SLICE_X7Y1 Kind=LUTRAM Net=lfsr/mask[0] Slot=slot3
Bit 52 0x004203A0 60 1 Block=SLICE_X7Y1 Kind=LUTRAM Net=lfsr/mask[1] Slot=slot3
Bit 53 0x004203A0 60 2 Block=SLICE_X7Y1 Kind=LUTRAM Net=lfsr/mask[2] Slot=slot3
Bit 54 0x004203A0 60 3 Block=SLICE_X7Y1 Kind=LUTRAM Net=lfsr/mask[3] Slot=slot3
Bit 55 0x004203A0 60 4 Block=SLICE_X7Y1 Kind=LUTRAM Net=lfsr/mask[4] Slot=slot3
Bit 56 0x004203A0 60 5 Block=SLICE_X7Y1 Kind=LUTRAM Net=lfsr/mask[5] Slot=slot3
Bit 57 0x004203A0 60 6 Block=SLICE_X7Y1 Kind=LUTRAM Net=lfsr/mask[6] Slot=slot3
Bit 58 0x004203A0 60 7 Block=SLICE_X7Y1 Kind=LUTRAM Net=lfsr/mask[7] Slot=slot3
Bit 59 0x0042041E 44 0 Block=SLICE_X8Y1 Kind=FF Net=rng/q[0] Slot=slot4
Bit 60 0x0042041E 44 1 Block=SLICE_X8Y1 Kind=FF Net=rng/q[1] Slot=slot4
Bit 61 0x0042041E 44 2 Block=SLICE_X8Y1 Kind=FF Net=rng/q[2] Slot=slot4
Bit 62 0x0042041E 44 3 Block=SLICE_X8Y1 Kind=FF Net=rng/q[3] Slot=slot4
Bit 63 0x0042041E 44 4 Block=SLICE_X8Y1 Kind=FF Net=rng/q[4] Slot=slot4
Bit 64 0x0042041E 44 5 Block=SLICE_X8Y1 Kind=FF Net=rng/q[5] Slot=slot4
Bit 65 0x0042041E 44 6 Block=SLICE_X8Y1 Kind=FF Net=rng/q[6] Slot=slot4
Bit 66 0x0042041E 44 7 Block=SLICE_X8Y1 Kind=FF Net=rng/q[7] Slot=slot4
Bit 67 0x0042041E 44 8 Block=SLICE_X8Y1 Kind=FF Net=rng/q[8] Slot=slot4
Bit 68 0x0042041E 44 9 Block=SLICE_X8Y1 Kind=FF Net=rng/q[9] Slot=slot4
Bit 69 0x0042041E 44 10 Block=SLICE_X8Y1 Kind=FF Net=rng/q[10] Slot=slot4
Bit 70 0x0042041E 44 11 Block=SLICE_X8Y1 Kind=FF Net=rng/q[11] Slot=slot4
Bit 71 0x0042041E 44 12 Block=SLICE_X8Y1 Kind=FF Net=rng/q[12] Slot=slot4
Bit 72 0x0042041E 44 13 Block=SLICE_X8Y1 Kind=FF Net=rng/q[13] Slot=slot4
Bit 73 0x0042041E 44 14 Block=SLICE_X8Y1 Kind=FF Net=rng/q[14] Slot=slot4
Bit 74 0x0042041E 44 15 Block=SLICE_X8Y1 Kind=FF Net=rng/q[15] Slot=slot4
Bit 75 0x0042041E 45 0 Block=SLICE_X8Y1 Kind=FF Net=rng/q[16] Slot=slot4
Bit 76 0x0042041E 45 1 Block=SLICE_X8Y1 Kind=FF Net=rng/q[17] Slot=slot4
Bit 77 0x0042041E 45 2 Block=SLICE_X8Y1 Kind=FF Net=rng/q[18] Slot=slot4
Bit 78 0x0042041E 45 3 Block=SLICE_X8Y1 Kind=FF Net=rng/q[19] Slot=slot4
Bit 79 0x0042041E 45 4 Block=SLICE_X8Y1 Kind=FF Net=rng/q[20] Slot=slot4
Bit 80 0x0042041E 45 5 Block=SLICE_X8Y1 Kind=FF Net=rng/q[21] Slot=slot4
Bit 81 0x0042041E 45 6 Block=SLICE_X8Y1 Kind=FF Net=rng/q[22] Slot=slot4
Bit 82 0x0042041E 45 7 Block=SLICE_X8Y1 Kind=FF Net=rng/q[23] Slot=slot4
Bit 83 0x0042041E 45 8 Block=SLICE_X8Y1 Kind=FF Net=rng/q[24] Slot=slot4
Bit 84 0x0042041E 45 9 Block=SLICE_X8Y1 Kind=FF Net=rng/q[25] Slot=slot4
Bit 85 0x0042041E 45 10 Block=SLICE_X8Y1 Kind=FF Net=rng/q[26] Slot=slot4
Bit 86 0x0042041E 45 11 Block=SLICE_X8Y1 Kind=FF Net=rng/q[27] Slot=slot4
Bit 87 0x0042041E 45 12 Block=SLICE_X8Y1 Kind=FF Net=rng/q[28] Slot=slot4
Bit 88 0x0042041E 45 13 Block=SLICE_X8Y1 Kind=FF Net=rng/q[29] Slot=slot4
Bit 89 0x0042041E 45 14 Block=SLICE_X8Y1 Kind=FF Net=rng/q[30] Slot=slot4
Bit 90 0x0042041E 45 15 Block=SLICE_X8Y1 Kind=FF Net=rng/q[31] Slot=slot4
)fixture";

const char* const kDemoCountersScript = R"fixture(# two counters: save at t=3, interfere, restore
load slot0 upcounter4
load slot1 downcounter4
assert slot0 0x0
assert slot1 0xF
tick 3 update=1
assert slot0 0x3
assert slot1 0xC
save slot0
save slot1
tick 4 update=1
assert slot0 0x7
assert slot1 0x8
restore slot0
restore slot1
assert slot0 0x3
assert slot1 0xC
assert-oracle slot0
assert-oracle slot1
)fixture";

const char* const kDemoBramScript = R"fixture(# BRAM chain: the save-side fixup keeps the restored memory exact
load slot2 bramchain seed=0x00C0FFEE len=2
tick 5
save slot2
tick 7
restore slot2
assert-oracle slot2
tick 3
assert-oracle slot2
)fixture";

}  // namespace epoch::cli
