//! Closed-form counts and Milnor numbers of weighted-homogeneous germs, as
//! rational expressions in the weights `w*` and degrees `d*`.

pub const T8: &str = "((d1^3*(d2^3*d3^3*d4^3-6*d2^2*d3^2*d4^2*w1*w2*w3+11*d2*d3*d4*w1^2*w2^2*w3^2 -6*w1^3*w2^3*w3^3)-6*w1^3*w2^3*w3^3*(d2^3+d3^3+d4^3-6*d4^2*w1+11*d4*w1^2-6*w1^3-6*d4^2*w2 +17*d4*w1*w2-11*w1^2*w2+11*d4*w2^2-11*w1*w2^2-6*w2^3 +6*d3^2*(d4-w1-w2-w3)+6*d2^2*(d3+d4-w1-w2-w3)-6*d4^2*w3 +17*d4*w1*w3-11*w1^2*w3+17*d4*w2*w3-17*w1*w2*w3 -11*w2^2*w3+11*d4*w3^2 -11*w1*w3^2-11*w2*w3^2-6*w3^3 +d2*(6*d3^2+6*d4^2+11*w1^2+17*w1*w2+11*w2^2 +17*d3*(d4-w1-w2-w3) +17*w1*w3+17*w2*w3+11*w3^2-17*d4*(w1+w2+w3))+d3*(6*d4^2+11*w1^2 +11*w2^2+17*w2*w3+11*w3^2+17*w1*(w2+w3)-17*d4*(w1+w2+w3))) -6*d1^2*w1*w2*w3*(d2^3*d3^2*d4^2 -6*w1^2*w2^2*w3^2*(-d3-d4+w1+w2+w3) +d2^2*d3*d4*(d3^2*d4+d3*d4*(d4-w1-w2-w3)-5*w1*w2*w3) +d2*w1*w2*w3*(-5*d3^2*d4+6*w1*w2*w3+5*d3*d4*(-d4+w1+w2+w3))) +d1*w1^2*w2^2*w3^2*(11*d2^3*d3*d4+6*d2^2*(5*d3^2*d4+5*d3*d4*(d4-w1-w2-w3) -6*w1*w2*w3)-6*w1*w2*w3*(6*d3^2+6*d4^2+11*w1^2+17*w1*w2+11*w2^2 +17*d3*(d4-w1-w2-w3)+17*w1*w3+17*w2*w3+11*w3^2 -17*d4*(w1+w2+w3))+d2*(11*d3^3*d4+30*d3^2*d4*(d4-w1-w2-w3) +102*w1*w2*w3*(-d4+w1+w2+w3)+d3*(11*d4^3-102*w1*w2*w3 -30*d4^2*(w1+w2+w3) +d4*(19*w1^2+19*w2^2+30*w2*w3+19*w3^2 +30*w1*(w2+w3)))))))/(6*w1^4*w2^4*w3^4)";

pub const A2_22: &str = "(d1^2+d2^2+2*w1^2+3*d1*(d2-w1-w2)+3*w1*w2+2*w2^2-3*d2*(w1+w2))/(w1*w2)";

pub const A11_22: &str = "(d1*d2*(d1+d2-w1-w2)^2-4*w1*w2*(d1+d2-w1-w2)^2-2*w1*w2*(w1^2+w1*w2+w2^2+d1*(d2-w1-w2)-d2*(w1+w2)))/(2*w1^2*w2^2)";

pub const A1_23: &str = "(d1*d2+(d1+d2)*d3-(d1+d2+d3)*w1+w1^2-(d1+d2+d3-w1)*w2+w2^2)/(w1*w2)";

pub const A03_23: &str = "(d1^2*d2^2*d3^2-3*d1*d2*d3*w1*w2*(d1+d2+d3-w1-w2)+2*w1^2*w2^2*(d1*d2+(d1+d2)*d3-(d1+d2+d3)*w1+w1^2+(d1+d2+d3-w1-w2)^2-(d1+d2+d3-w1)*w2+w2^2))/(6*w1^3*w2^3)";

pub const A3_33: &str = "(((d1+d2+d3-w1-w2-w3)^3+3*(d1+d2+d3-w1 -w2-w3)*(d1*d2+(d1+d2)*d3-(d1+d2+d3)*w1+w1^2-(d1+d2+d3 -w1)*w2+w2^2-(d1+d2+d3-w1-w2)*w3+w3^2)+2*(d1*d2*d3-(d2*d3 +d1*(d2+d3))*w1+(d1+d2+d3)*w1^2-w1^3-(d1*d2+(d1+d2)*d3 -(d1+d2+d3)*w1+w1^2)*w2+(d1+d2+d3-w1)*w2^2-w2^3-(d1*d2 +(d1+d2)*d3-(d1+d2+d3)*w1+w1^2-(d1+d2+d3-w1)*w2+w2^2)*w3 +(d1+d2+d3-w1-w2)*w3^2-w3^3)))/(w1*w2*w3)";

pub const A12_33: &str = "(d1^4*d2*d3+d1^3*(4*d2^2*d3+4*d2*d3*(d3-w1-w2-w3) -6*w1*w2*w3)-6*w1*w2*w3*(d2^3+d3^3-4*w1^3-8*w1^2*w2-8*w1*w2^2-4*w2^3 +5*d2^2*(d3-w1-w2-w3)-8*w1^2*w3-13*w1*w2*w3-8*w2^2*w3-8*w1*w3^2 -8*w2*w3^2-4*w3^3-5*d3^2*(w1+w2+w3)+d3*(8*w1^2+8*w2^2+13*w2*w3+8*w3^2 +13*w1*(w2+w3)) +d2*(5*d3^2+8*w1^2+8*w2^2+13*w2*w3+8*w3^2+13*w1*(w2 +w3)-13*d3*(w1+w2+w3))) +d1^2*(4*d2^3*d3+9*d2^2*d3*(d3-w1-w2-w3) +30*w1*w2*w3*(-d3+w1+w2+w3) +d2*(4*d3^3-30*w1*w2*w3-9*d3^2*(w1 +w2+w3)+d3*(5*w1^2+5*w2^2+9*w2*w3+5*w3^2+9*w1*(w2+w3)))) +d1*(d2^4*d3+4*d2^3*d3*(d3-w1-w2-w3)-6*w1*w2*w3*(5*d3^2+8*w1^2+8*w2^2 +13*w2*w3+8*w3^2+13*w1*(w2+w3)-13*d3*(w1+w2+w3)) +d2^2*(4*d3^3-30*w1*w2*w3-9*d3^2*(w1+w2+w3)+d3*(5*w1^2+5*w2^2+9*w2*w3 +5*w3^2+9*w1*(w2+w3)))+d2*(d3^4-4*d3^3*(w1+w2+w3) +78*w1*w2*w3*(w1+w2+w3)+d3^2*(5*w1^2+5*w2^2+9*w2*w3+5*w3^2 +9*w1*(w2+w3))-d3*(2*w1^3+2*w2^3+5*w2^2*w3+5*w2*w3^2+2*w3^3 +5*w1^2*(w2+w3)+w1*(5*w2^2+87*w2*w3+5*w3^2)))))/(w1^2*w2^2*w3^2)";

pub const A111_33: &str = "((d1^5*d2^2*d3^2+3*d1^4*d2*d3*(d2^2*d3+d2*d3*(d3-w1-w2-w3) -4*w1*w2*w3) -8*w1^2*w2^2*w3^2*(-5*d2^3-5*d3^3+15*w1^3+32*w1^2*w2+32*w1*w2^2+15*w2^3 -22*d2^2*(d3-w1-w2-w3)+32*w1^2*w3+54*w1*w2*w3+32*w2^2*w3+32*w1*w3^2 +32*w2*w3^2+15*w3^3 +22*d3^2*(w1+w2+w3)-2*d3*(16*w1^2+16*w2^2+27*w2*w3 +16*w3^2+27*w1*(w2+w3))-2*d2*(11*d3^2+16*w1^2+16*w2^2+27*w2*w3+16*w3^2 +27*w1*(w2+w3)-27*d3*(w1+w2+w3)))+d1^3*(3*d2^4*d3^2+6*d2^3*d3^2*(d3-w1 -w2-w3)-42*d2*d3*w1*w2*(d3-w1-w2-w3)*w3+40*w1^2*w2^2*w3^2 +3*d2^2*d3*(d3^3-14*w1*w2*w3-2*d3^2*(w1+w2+w3)+d3*(w1+w2+w3)^2)) +d1^2*(d2^5*d3^2+3*d2^4*d3^2*(d3-w1-w2-w3)-176*w1^2*w2^2*w3^2*(-d3+w1+w2 +w3) +3*d2^3*d3*(d3^3-14*w1*w2*w3-2*d3^2*(w1+w2+w3)+d3*(w1+w2+w3)^2) -2*d2*w1*w2*w3*(21*d3^3-88*w1*w2*w3-45*d3^2*(w1+w2+w3)+3*d3*(8*w1^2+8*w2^2 +15*w2*w3+8*w3^2+15*w1*(w2+w3)))+d2^2*d3*(d3^4-3*d3^3*(w1+w2+w3) +90*w1*w2*w3*(w1+w2+w3)+3*d3^2*(w1+w2+w3)^2-d3*(w1^3+3*w1^2*(w2 +w3) +(w2+w3)^3+3*w1*(w2^2+32*w2*w3+w3^2))))+2*d1*w1*w2*w3*(-6*d2^4*d3 -21*d2^3*d3*(d3-w1-w2-w3)+8*w1*w2*w3*(11*d3^2+16*w1^2+16*w2^2+27*w2*w3 +16*w3^2+27*w1*(w2+w3)-27*d3*(w1+w2+w3))-d2^2*(21*d3^3-88*w1*w2*w3 -45*d3^2*(w1+w2+w3)+3*d3*(8*w1^2+8*w2^2+15*w2*w3+8*w3^2 +15*w1*(w2+w3)))-3*d2*(2*d3^4-7*d3^3*(w1+w2+w3) +72*w1*w2*w3*(w1+w2+w3)+d3^2*(8*w1^2+8*w2^2+15*w2*w3+8*w3^2 +15*w1*(w2+w3))-d3*(3*w1^3+3*w2^3 +8*w2^2*w3+8*w2*w3^2+3*w3^3 +8*w1^2*(w2+w3)+w1*(8*w2^2+87*w2*w3+8*w3^2))))))/(6*w1^3*w2^3*w3^3)";

pub const A3_C1: &str = "(d-w0)*(d-2*w0)*(d-3*w0)/(w0*w1*w2)";

pub const A12_C1: &str = "(d-w0)*(d-2*w0)*(d-3*w0)*(d-4*w0)/(w0^2*w1*w2)";

pub const A111_C1: &str = "(d-w0)*(d-2*w0)*(d-3*w0)*(d-4*w0)*(d-5*w0)/(6*w0^3*w1*w2)";

pub const A04_C1: &str = "(d1-w0)*(d1-2*w0)*(d1-3*w0)*(d2-w0)*(d2-2*w0)*(d2-3*w0)/(6*w0^4*w1*w2)";

pub const MUI_23: &str = "(d1^2*(d2^2*d3^2-w1^2*w2^2)-w1^2*w2^2*(d2^2+d3^2+5*w1^2+9*w1*w2+5*w2^2-6*d3*(w1+w2)+3*d2*(d3-2*(w1+w2)))-3*d1*w1*w2*(w1*w2*(d3-2*(w1+w2))+d2*(w1*w2+d3*(w1+w2))))/(6*w1^3*w2^3)";

pub const MUI_34: &str = "((d1^3*(d2^3*d3^3*d4^3+2*d2^2*d3^2*d4^2*w1*w2*w3-d2*d3*d4*w1^2*w2^2*w3^2-2*w1^3*w2^3*w3^3) +2*d1^2*w1*w2*w3*(d2^3*d3^2*d4^2+2*(d3+d4)*w1^2*w2^2*w3^2+d2*w1*w2*w3 *(-9*d3^2*d4+2*w1*w2*w3 +9*d3*d4*(-d4+w1+w2+w3)) +d2^2*d3*d4*(d3^2*d4-9*w1*w2*w3+d3*d4*(d4-3*(w1+w2+w3)))) +2*w1^3*w2^3*w3^3*(-d2^3-d3^3+2*d3^2*d4-d4^3 +2*d2^2*(d3+d4)+d4*w1^2-9*d4*w1*w2 +9*w1^2*w2+d4*w2^2+9*w1*w2^2-9*d4*w1*w3 +9*w1^2*w3-9*d4*w2*w3 +27*w1*w2*w3+9*w2^2*w3+d4*w3^2+9*w1*w3^2+9*w2*w3^2 +d3*(2*d4^2+w1^2+w2^2-9*w2*w3+w3^2-9*w1*(w2+w3) -3*d4*(w1+w2+w3)) +d2*(2*d3^2+2*d4^2+w1^2-9*w1*w2+w2^2-9*w1*w3-9*w2*w3+w3^2 -3*d4*(w1+w2+w3)+d3*(9*d4-3*(w1+w2+w3)))) -d1*w1^2*w2^2*w3^2*(d2^3*d3*d4 +2*d2^2*(9*d3^2*d4+9*d3*d4*(d4-w1-w2-w3) -2*w1*w2*w3)-2*w1*w2*w3*(2*d3^2+2*d4^2+w1^2-9*w1*w2+w2^2-9*w1*w3 -9*w2*w3+w3^2-3*d4*(w1+w2+w3)+d3*(9*d4-3*(w1+w2+w3))) +d2*(d3^3*d4+18*d3^2*d4*(d4-w1-w2-w3)+6*w1*w2*w3 *(-3*d4+w1+w2+w3)+d3*(d4^3-18*w1*w2*w3-18*d4^2*(w1+w2+w3) +d4*(17*w1^2+17*w2^2+6*w2*w3+17*w3^2+6*w1*(w2+w3)))))))/(24*w1^4*w2^4*w3^4)";

pub const MUI2_34: &str = "((d1^3*(3*d2^3*d3^3*d4^3-2*d2^2*d3^2*d4^2*w1*w2*w3-3*d2*d3*d4*w1^2*w2^2*w3^2 +2*w1^3*w2^3*w3^3)+2*w1^3*w2^3*w3^3*(d2^3+d3^3+d4^3-24*d4^2*w1+47*d4*w1^2-24*w1^3 -24*d4^2*w2+57*d4*w1*w2-33*w1^2*w2+47*d4*w2^2-33*w1*w2^2-24*w2^3 -24*d4^2*w3+57*d4*w1*w3-33*w1^2*w3+57*d4*w2*w3-51*w1*w2*w3-33*w2^2*w3 +47*d4*w3^2-33*w1*w3^2-33*w2*w3^2-24*w3^3 +d3^2*(22*d4-24*(w1+w2+w3))+d2^2*(22*d3+22*d4-24*(w1+w2+w3)) +d3*(22*d4^2+47*w1^2+47*w2^2+57*w2*w3+47*w3^2+57*w1*(w2+w3)-69*d4*(w1 +w2+w3))+d2*(22*d3^2+22*d4^2+47*w1^2+57*w1*w2+47*w2^2+57*w1*w3 +57*w2*w3+47*w3^2-69*d4*(w1+w2+w3)+d3*(75*d4-69*(w1+w2+w3)))) -2*d1^2*w1*w2*w3*(d2^3*d3^2*d4^2+2*w1^2*w2^2*w3^2*(-11*d3-11*d4+12*(w1+w2+w3)) -d2*w1*w2*w3*(-21*d3^2*d4+22*w1*w2*w3-3*d3*d4*(7*d4-9*(w1+w2+w3))) +d2^2*d3*d4*(d3^2*d4+21*w1*w2*w3+d3*d4*(d4+3*(w1+w2+w3))))+d1*w1^2*w2^2*w3^2 *(-3*d2^3*d3*d4+2*w1*w2*w3*(22*d3^2+22*d4^2+47*w1^2+57*w1*w2+47*w2^2+57*w1*w3 +57*w2*w3+47*w3^2-69*d4*(w1+w2+w3)+d3*(75*d4-69*(w1+w2+w3))) +d2^2*(-42*d3^2*d4+44*w1*w2*w3-6*d3*d4*(7*d4-9*(w1+w2+w3))) -3*d2*(d3^3*d4+2*d3^2*d4*(7*d4-9*(w1+w2+w3))+2*w1*w2*w3*(-25*d4 +23*(w1+w2+w3))+d3*(d4^3-50*w1*w2*w3-18*d4^2*(w1+w2+w3) +d4*(17*w1^2+17*w2^2+18*w2*w3+17*w3^2+18*w1*(w2+w3)))))))/(24*w1^4*w2^4*w3^4)";

pub const MUI_C1: &str = "(w0-d1)*(w0-d2)/(24*w0^4*w1*w2)*(d1^2*(d2^2+3*d2*w0+2*w0^2)+d1*w0*(3*d2^2-d2*(19*w0+4*(w1+w2))+2*w0*(w0-2*(w1+w2)))+2*w0^2*(d2^2+d2*(w0-2*(w1+w2))+2*(5*w0*(w1+w2)+3*w1*w2)))";

pub const MUD_22: &str = "(d1*d2-2*w1*w2)*(d1^2+d2^2+w1^2+2*d1*(d2-w1-w2)+w2^2-2*d2*(w1+w2))/(2*w1^2*w2^2)";

pub const MUD_33: &str = "((d1^5*d2^2*d3^2+3*d1^4*d2*d3*(d2^2*d3+d2*d3*(d3-w1-w2-w3) -w1*w2*w3)+w1^2*w2^2*w3^2*(d2^3+d3^3-6*w1^3-7*w1^2*w2-7*w1*w2^2-6*w2^3-7*w1^2*w3 -15*w1*w2*w3-7*w2^2*w3-7*w1*w3^2-7*w2*w3^2-6*w3^3-8*d3^2*(w1+w2+w3) +d3*(13*w1^2+13*w2^2+15*w2*w3+13*w3^2+15*w1*(w2+w3)) +2*d2^2*(7*d3-4*(w1+w2+w3))+d2*(14*d3^2+13*w1^2+13*w2^2+15*w2*w3 +13*w3^2+15*w1*(w2+w3)-27*d3*(w1+w2+w3))) +d1^3*(3*d2^4*d3^2+6*d2^3*d3^2*(d3-w1-w2-w3)+w1^2*w2^2*w3^2-3*d2*d3*w1*w2*w3 *(5*d3-4*(w1+w2+w3))+3*d2^2*d3*(d3^3-5*w1*w2*w3-2*d3^2*(w1+w2+w3) +d3*(w1+w2+w3)^2))+d1^2*(d2^5*d3^2+3*d2^4*d3^2*(d3-w1-w2-w3) -2*w1^2*w2^2*w3^2*(-7*d3+4*(w1+w2+w3)) +3*d2^3*d3*(d3^3-5*w1*w2*w3-2*d3^2*(w1+w2+w3)+d3*(w1+w2+w3)^2) -d2*w1*w2*w3*(15*d3^3-14*w1*w2*w3-30*d3^2*(w1+w2+w3) +3*d3*(5*w1^2+5*w2^2+8*w2*w3+5*w3^2+8*w1*(w2+w3))) +d2^2*d3*(d3^4-3*d3^3*(w1+w2+w3)+30*w1*w2*w3*(w1+w2+w3) +3*d3^2*(w1+w2+w3)^2-d3*(w1^3+3*w1^2*(w2+w3)+(w2+w3)^3 +3*w1*(w2^2+14*w2*w3+w3^2))))+d1*w1*w2*w3*(-3*d2^4*d3-3*d2^3*d3 *(5*d3-4*(w1+w2+w3))+w1*w2*w3*(14*d3^2+13*w1^2+13*w2^2+15*w2*w3 +13*w3^2+15*w1*(w2+w3)-27*d3*(w1+w2+w3))-d2^2*(15*d3^3-14*w1*w2*w3 -30*d3^2*(w1+w2+w3)+3*d3*(5*w1^2+5*w2^2+8*w2*w3+5*w3^2+8*w1*(w2+w3))) -3*d2*(d3^4-4*d3^3*(w1+w2+w3)+9*w1*w2*w3*(w1+w2+w3) +d3^2*(5*w1^2+5*w2^2+8*w2*w3+5*w3^2+8*w1*(w2+w3)) -d3*(2*w1^3+4*w1^2*(w2+w3) +w1*(4*w2^2+21*w2*w3+4*w3^2)+2*(w2^3+2*w2^2*w3 +2*w2*w3^2+w3^3))))))/(6*w1^3*w2^3*w3^3)";

pub const MUD_C1: &str = "(d-2*w0)/(6*w0^3*w1*w2)*(d^4-4*d^3*w0+d^2*w0*(8*w0-3*(w1+w2))+2*d*w0^2*(3*(w1+w2)-4*w0)+3*w0^2*(w0^2-w0*(w1+w2)+2*w1*w2))";
