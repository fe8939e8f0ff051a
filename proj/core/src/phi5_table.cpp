// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "aclambda/rsfamily.hpp"

namespace aclambda {

// Embedded copy of core/data/phi5_table.txt, byte for byte. The test suite
// checks the two stay in sync.
const char* const kPhi5TableText =
    "# classical modular polynomial Phi_5(X,Y), monomials as \"xdeg ydeg coefficient\"\n"
    "0 0 141359947154721358697753474691071362751004672000\n"
    "1 0 53274330803424425450420160273356509151232000\n"
    "1 1 -264073457076620596259715790247978782949376\n"
    "2 0 6692500042627997708487149415015068467200\n"
    "2 1 36554736583949629295706472332656640000\n"
    "2 2 5110941777552418083110765199360000\n"
    "3 0 280244777828439527804321565297868800\n"
    "3 1 -192457934618928299655108231168000\n"
    "3 2 26898488858380731577417728000\n"
    "3 3 -441206965512914835246100\n"
    "4 0 1284733132841424456253440\n"
    "4 1 128541798906828816384000\n"
    "4 2 383083609779811215375\n"
    "4 3 107878928185336800\n"
    "4 4 1665999364600\n"
    "5 0 1963211489280\n"
    "5 1 -246683410950\n"
    "5 2 2028551200\n"
    "5 3 -4550940\n"
    "5 4 3720\n"
    "5 5 -1\n"
    "6 0 1\n";

}  // namespace aclambda
