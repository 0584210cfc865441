"""Transcribed coefficient formulas of the moment recurrence.

Every function takes ``(a, m, k)`` with ``a`` the ensemble parameter alpha and
uses only ring operations, so the arguments may be Fractions, polynomials in k,
or truncated series in alpha.  Denominators are returned as factor tuples so a
vanishing factor can be reported by name.
"""

# fmt: off


def g1(a, m, k):
    return (
        (k + 2)*(k + 3)*( - 2*a + k - 2*m - 1)*(2*a + k + 2*m + 1)*( - 2*k**3 + 10*k**2
        + k*(8*a**2 + 8*a + 9*m**2 + 18*a*m + 9*m - 10) - 4*a**2 - 4*a - 3*m**2 - 6*a*m
        - 3*m + 2)
    )


G1_FACTORS_LABELS = (
    '(k + 2)',
    '(k + 3)',
    '(-2*alpha + k - 2*m - 1)',
    '(2*alpha + k + 2*m + 1)',
    'degree-3 polynomial factor in k',
)


def g1_factors(a, m, k):
    return (
        (k + 2),
        (k + 3),
        ( - 2*a + k - 2*m - 1),
        (2*a + k + 2*m + 1),
        ( - 2*k**3 + 10*k**2 + k*(8*a**2 + 8*a + 9*m**2 + 18*a*m + 9*m - 10)
            - 4*a**2 - 4*a - 3*m**2 - 6*a*m - 3*m + 2),
    )


def g2(a, m, k):
    return (
        - 4*k**9 + 4*k**8 + 2*k**7*(14*a**2 + 14*a + 9*m**2 + 18*a*m + 9*m + 18)
        + 2*k**6*(22*a**2 + 22*a + 39*m**2 + 78*a*m + 39*m + 6) + 2*k**5*( - 16*a**4
        - 32*a**3 - 60*a**2 - 44*a + 27*m**4 + 108*a*m**3 + 54*m**3 + 117*a**2*m**2
        + 117*a*m**2 + 21*m**2 + 18*a**3*m + 27*a**2*m - 3*a*m - 6*m - 30)
        - 2*k**4*(108*a**4 + 216*a**3 + 176*a**2 + 68*a + 135*m**4 + 540*a*m**3
        + 270*m**3 + 789*a**2*m**2 + 789*a*m**2 + 249*m**2 + 498*a**3*m + 747*a**2*m
        + 477*a*m + 114*m + 18) - k**3*(64*a**6 + 192*a**5 + 408*a**4 + 496*a**3
        + 172*a**2 - 44*a + 243*m**6 + 1458*a*m**5 + 729*m**5 + 3456*a**2*m**4
        + 3456*a*m**4 + 1275*m**4 + 4104*a**3*m**3 + 6156*a**2*m**3 + 4722*a*m**3
        + 1335*m**3 + 2520*a**4*m**2 + 5040*a**3*m**2 + 6006*a**2*m**2 + 3486*a*m**2
        + 564*m**2 + 720*a**5*m + 1800*a**4*m + 2964*a**3*m + 2646*a**2*m + 798*a*m
        + 18*m - 28) - k**2*(96*a**6 + 288*a**5 + 264*a**4 + 48*a**3 - 116*a**2 - 92*a
        + 405*m**6 + 2430*a*m**5 + 1215*m**5 + 5724*a**2*m**4 + 5724*a*m**4 + 1077*m**4
        + 6696*a**3*m**3 + 10044*a**2*m**3 + 3606*a*m**3 + 129*m**3 + 4008*a**4*m**2
        + 8016*a**3*m**2 + 4158*a**2*m**2 + 150*a*m**2 - 300*m**2 + 1104*a**5*m
        + 2760*a**4*m + 1884*a**3*m + 66*a**2*m - 486*a*m - 162*m - 20) + k*( - 32*a**6
        - 96*a**5 - 40*a**4 + 80*a**3 + 72*a**2 + 16*a + 27*m**6 + 162*a*m**5 + 81*m**5
        + 384*a**2*m**4 + 384*a*m**4 + 141*m**4 + 456*a**3*m**3 + 684*a**2*m**3
        + 522*a*m**3 + 147*m**3 + 240*a**4*m**2 + 480*a**3*m**2 + 660*a**2*m**2
        + 420*a*m**2 + 72*m**2 + 240*a**3*m + 360*a**2*m + 144*a*m + 12*m)
        + 3*m*(32*a**5 + 80*a**4 + 64*a**3 + 16*a**2 - 8*a + 15*m**5 + 90*a*m**4
        + 45*m**4 + 212*a**2*m**3 + 212*a*m**3 + 41*m**3 + 248*a**3*m**2 + 372*a**2*m**2
        + 138*a*m**2 + 7*m**2 + 144*a**4*m + 288*a**3*m + 160*a**2*m + 16*a*m - 8*m - 4)
    )


def g3(a, m, k):
    return (
        (k - 2)*(k - 1)*( - 2*a + k - 1)*( - a + k - 2)*( - a + k - 1)*(a + k - 1)*(a
        + k)*(2*a + k + 1)*(2*k**3 + 2*k**2 - k*(8*a**2 + 8*a + 9*m**2 + 18*a*m + 9*m
        + 6) - 3*(4*a**2 + 4*a + 5*m**2 + 10*a*m + 5*m + 2))
    )


G3_FACTORS_LABELS = (
    '(k - 2)',
    '(k - 1)',
    '(-2*alpha + k - 1)',
    '(-alpha + k - 2)',
    '(-alpha + k - 1)',
    '(alpha + k - 1)',
    '(alpha + k)',
    '(2*alpha + k + 1)',
    'degree-3 polynomial factor in k',
)


def g3_factors(a, m, k):
    return (
        (k - 2),
        (k - 1),
        ( - 2*a + k - 1),
        ( - a + k - 2),
        ( - a + k - 1),
        (a + k - 1),
        (a + k),
        (2*a + k + 1),
        (2*k**3 + 2*k**2 - k*(8*a**2 + 8*a + 9*m**2 + 18*a*m + 9*m + 6) - 3*(4*a**2
            + 4*a + 5*m**2 + 10*a*m + 5*m + 2)),
    )


def b1_num(a, m, k):
    return (
        (k - 1)*( - 2*a + k - 1)*( - a + k - 1)*(a + k)*(2*a + k + 1)*(2*k**3*(2*a**2
        + 5*a + 2*m**2 + 4*a*m + 5*m + 3) + k**2*(4*a**3 + 22*a**2 + 38*a + 4*m**3
        + 12*a*m**2 + 23*m**2 + 12*a**2*m + 46*a*m + 39*m + 20) + k*(8*a**3 + 30*a**2
        + 40*a + 2*m**4 + 8*a*m**3 + 14*m**3 + 10*a**2*m**2 + 40*a*m**2 + 37*m**2
        + 4*a**3*m + 34*a**2*m + 70*a*m + 43*m + 18) + (m + 1)**2*(2*a + m + 2)**2)
    )


B1_DEN_LABELS = (
    '2',
    '(alpha + m + 1)',
    '(alpha + m + 2)',
    'degree-5 polynomial factor in k',
)


def b1_den(a, m, k):
    return (
        2,
        (a + m + 1),
        (a + m + 2),
        (2*k**5*(2*a + 2*m + 3)**2 + 4*k**4*(m + 1)*(2*a + m + 2) - k**3*(32*a**4
            + 200*a**3 + 472*a**2 + 478*a + 36*m**4 + 144*a*m**3 + 216*m**3
            + 212*a**2*m**2 + 644*a*m**2 + 483*m**2 + 136*a**3*m + 628*a**2*m + 954*a*m
            + 477*m + 178) - k**2*(m + 1)*(32*a**3 + 136*a**2 + 186*a + 18*m**3
            + 72*a*m**2 + 90*m**2 + 88*a**2*m + 232*a*m + 149*m + 82) + k*(32*a**4
            + 128*a**3 + 192*a**2 + 126*a + 4*m**4 + 16*a*m**3 + 24*m**3 + 48*a**2*m**2
            + 96*a*m**2 + 59*m**2 + 64*a**3*m + 192*a**2*m + 190*a*m + 69*m + 32) + (m
            + 1)*(8*a**3 + 24*a**2 + 26*a + 2*m**3 + 8*a*m**2 + 10*m**2 + 12*a**2*m
            + 28*a*m + 17*m + 10)),
    )


def b2_num(a, m, k):
    return (
        (k + 2)*(2*a + k + 2*m + 3)*(2*k**4*(2*a**2 + 5*a + 2*m**2 + 4*a*m + 5*m + 3)
        - k**3*(12*a**3 + 50*a**2 + 66*a + 12*m**3 + 36*a*m**2 + 49*m**2 + 36*a**2*m
        + 98*a*m + 65*m + 28) + k**2*(8*a**4 + 68*a**3 + 162*a**2 + 150*a + 18*m**4
        + 72*a*m**3 + 98*m**3 + 98*a**2*m**2 + 284*a*m**2 + 191*m**2 + 52*a**3*m
        + 254*a**2*m + 362*a*m + 159*m + 48) - k*(24*a**4 + 116*a**3 + 198*a**2 + 142*a
        + 12*m**5 + 60*a*m**4 + 84*m**4 + 108*a**2*m**3 + 324*a*m**3 + 224*m**3
        + 84*a**3*m**2 + 424*a**2*m**2 + 628*a*m**2 + 283*m**2 + 24*a**4*m + 212*a**3*m
        + 528*a**2*m + 510*a*m + 167*m + 36) + 16*a**4 + 60*a**3 + 82*a**2 + 48*a
        + 4*m**5 + 20*a*m**4 + 26*m**4 + 44*a**2*m**3 + 108*a*m**3 + 66*m**3
        + 52*a**3*m**2 + 182*a**2*m**2 + 212*a*m**2 + 81*m**2 + 24*a**4*m + 128*a**3*m
        + 230*a**2*m + 174*a*m + 47*m + 10)
    )


B2_DEN_LABELS = (
    '2',
    '(alpha + m + 1)',
    '(alpha + m + 2)',
    'degree-5 polynomial factor in k',
)


def b2_den(a, m, k):
    return (
        2,
        (a + m + 1),
        (a + m + 2),
        ( - 2*k**5*(2*a + 2*m + 3)**2 - 4*k**4*(m + 1)*(2*a + m + 2) + k**3*(32*a**4
            + 200*a**3 + 472*a**2 + 478*a + 36*m**4 + 144*a*m**3 + 216*m**3
            + 212*a**2*m**2 + 644*a*m**2 + 483*m**2 + 136*a**3*m + 628*a**2*m + 954*a*m
            + 477*m + 178) + k**2*(m + 1)*(32*a**3 + 136*a**2 + 186*a + 18*m**3
            + 72*a*m**2 + 90*m**2 + 88*a**2*m + 232*a*m + 149*m + 82) - k*(32*a**4
            + 128*a**3 + 192*a**2 + 126*a + 4*m**4 + 16*a*m**3 + 24*m**3 + 48*a**2*m**2
            + 96*a*m**2 + 59*m**2 + 64*a**3*m + 192*a**2*m + 190*a*m + 69*m + 32) - (m
            + 1)*(8*a**3 + 24*a**2 + 26*a + 2*m**3 + 8*a*m**2 + 10*m**2 + 12*a**2*m
            + 28*a*m + 17*m + 10)),
    )


def c1_num(a, m, k):
    return (
        (4*k**(11)*(2*a + 2*m + 3)**2 + 8*k**(10)*(24*a**2 + 74*a + 25*m**2 + 50*a*m
        + 75*m + 56) - 2*k**9*(56*a**4 + 296*a**3 + 134*a**2 - 948*a + 36*m**4
        + 144*a*m**3 + 216*m**3 + 236*a**2*m**2 + 668*a*m**2 - 25*m**2 + 184*a**3*m
        + 748*a**2*m + 10*a*m - 1047*m - 954) - 2*k**8*(560*a**4 + 3016*a**3 + 5044*a**2
        + 1778*a + 378*m**4 + 1512*a*m**3 + 2268*m**3 + 2460*a**2*m**2 + 6996*a*m**2
        + 3753*m**2 + 1896*a**3*m + 7764*a**2*m + 8082*a*m + 1053*m - 1050) - 2*k**7*(
        - 64*a**6 - 248*a**5 + 2408*a**4 + 14830*a**3 + 29456*a**2 + 22870*a + 108*m**6
        + 648*a*m**5 + 972*m**5 + 1440*a**2*m**4 + 4680*a*m**4 + 5289*m**4
        + 1440*a**3*m**3 + 7920*a**2*m**3 + 20076*a*m**3 + 17154*m**3 + 548*a**4*m**2
        + 5416*a**3*m**2 + 26755*a**2*m**2 + 49715*a*m**2 + 28497*m**2 - 56*a**5*m
        + 956*a**4*m + 14486*a**3*m + 47611*a**2*m + 56613*a*m + 21420*m + 5496)
        - 2*k**6*( - 512*a**6 - 2048*a**5 + 5704*a**4 + 45874*a**3 + 96580*a**2
        + 84892*a + 918*m**6 + 5508*a*m**5 + 8262*m**5 + 12186*a**2*m**4 + 39726*a*m**4
        + 34800*m**4 + 12024*a**3*m**3 + 66780*a**2*m**3 + 129696*a*m**3 + 84870*m**3
        + 4424*a**4*m**2 + 44920*a**3*m**2 + 160015*a**2*m**2 + 234179*a*m**2
        + 119955*m**2 - 512*a**5*m + 7568*a**4*m + 71090*a**3*m + 195697*a**2*m
        + 221385*a*m + 89487*m + 27234) + k**5*(256*a**8 + 4416*a**7 + 32256*a**6
        + 115312*a**5 + 198000*a**4 + 90880*a**3 - 185336*a**2 - 267104*a + 972*m**8
        + 7776*a*m**7 + 11664*m**7 + 26460*a**2*m**6 + 80892*a*m**6 + 54177*m**6
        + 49896*a**3*m**5 + 233604*a**2*m**5 + 318258*a*m**5 + 120177*m**5
        + 56736*a**4*m**4 + 362952*a**3*m**4 + 764688*a**2*m**4 + 586902*a*m**4
        + 96579*m**4 + 39456*a**5*m**3 + 325584*a**4*m**3 + 960144*a**3*m**3
        + 1164216*a**2*m**3 + 404478*a*m**3 - 120933*m**3 + 16096*a**6*m**2
        + 166656*a**5*m**2 + 660552*a**4*m**2 + 1169632*a**3*m**2 + 731072*a**2*m**2
        - 263998*a*m**2 - 355132*m**2 + 3392*a**7*m + 44064*a**6*m + 233232*a**5*m
        + 587336*a**4*m + 622960*a**3*m - 48416*a**2*m - 587444*a*m - 315984*m - 102840)
        + k**4*(1536*a**8 + 26752*a**7 + 183104*a**6 + 654656*a**5 + 1328576*a**4
        + 1512896*a**3 + 856760*a**2 + 134196*a + 6318*m**8 + 50544*a*m**7 + 75816*m**7
        + 171504*a**2*m**6 + 525312*a*m**6 + 381783*m**6 + 321408*a**3*m**5
        + 1511136*a**2*m**5 + 2242098*a*m**5 + 1047843*m**5 + 361872*a**4*m**4
        + 2330784*a**3*m**4 + 5324988*a**2*m**4 + 5079846*a*m**4 + 1686189*m**4
        + 248256*a**5*m**3 + 2068128*a**4*m**3 + 6521976*a**3*m**3 + 9617412*a**2*m**3
        + 6517542*a*m**3 + 1564101*m**3 + 99584*a**6*m**2 + 1043520*a**5*m**2
        + 4311472*a**4*m**2 + 8854024*a**3*m**2 + 9340320*a**2*m**2 + 4595918*a*m**2
        + 724636*m**2 + 20608*a**7*m + 271296*a**6*m + 1437248*a**5*m + 3923168*a**4*m
        + 5847024*a**3*m + 4563856*a**2*m + 1526480*a*m + 69690*m - 41956)
        + 2*k**3*(1280*a**8 + 23008*a**7 + 161152*a**6 + 597576*a**5 + 1289880*a**4
        + 1650074*a**3 + 1206664*a**2 + 449834*a + 6696*m**8 + 53568*a*m**7 + 80352*m**7
        + 180474*a**2*m**6 + 555450*a*m**6 + 410967*m**6 + 332892*a**3*m**5
        + 1582182*a**2*m**5 + 2402676*a*m**5 + 1167615*m**5 + 365112*a**4*m**4
        + 2394684*a**3*m**4 + 5627514*a**2*m**4 + 5615112*a*m**4 + 2008008*m**4
        + 241104*a**5*m**3 + 2063208*a**4*m**3 + 6721860*a**3*m**3 + 10403022*a**2*m**3
        + 7641144*a*m**3 + 2127087*m**3 + 91888*a**6*m**2 + 998976*a**5*m**2
        + 4278260*a**4*m**2 + 9225572*a**3*m**2 + 10546601*a**2*m**2 + 6036963*a*m**2
        + 1341995*m**2 + 17888*a**7*m + 246384*a**6*m + 1353400*a**5*m + 3867724*a**4*m
        + 6208378*a**3*m + 5569857*a**2*m + 2557891*a*m + 454128*m + 61758)
        + 2*k**2*(2272*a**7 + 33888*a**6 + 191328*a**5 + 540776*a**4 + 841030*a**3
        + 727732*a**2 + 326608*a + 4374*m**8 + 34992*a*m**7 + 52488*m**7
        + 114858*a**2*m**6 + 359802*a*m**6 + 269415*m**6 + 199260*a**3*m**5
        + 988038*a**2*m**5 + 1547964*a*m**5 + 771363*m**5 + 195216*a**4*m**4
        + 1386732*a**3*m**4 + 3454704*a**2*m**4 + 3609678*a*m**4 + 1345731*m**4
        + 105648*a**5*m**3 + 1044984*a**4*m**3 + 3766428*a**3*m**3 + 6289626*a**2*m**3
        + 4927992*a*m**3 + 1464057*m**3 + 27728*a**6*m**2 + 400128*a**5*m**2
        + 2047536*a**4*m**2 + 5000612*a**3*m**2 + 6303013*a**2*m**2 + 3947503*a*m**2
        + 971301*m**2 + 2272*a**7*m + 63408*a**6*m + 491184*a**5*m + 1740784*a**4*m
        + 3258206*a**3*m + 3317555*a**2*m + 1730691*a*m + 361755*m + 59106)
        - k*(2816*a**8 + 40640*a**7 + 224896*a**6 + 644720*a**5 + 1065568*a**4
        + 1048520*a**3 + 600572*a**2 + 180960*a + 1500*m**8 + 12000*a*m**7 + 18000*m**7
        + 48048*a**2*m**6 + 132048*a*m**6 + 93687*m**6 + 120288*a**3*m**5
        + 468720*a**2*m**5 + 616554*a*m**5 + 276183*m**5 + 190992*a**4*m**4
        + 983424*a**3*m**4 + 1869924*a**2*m**4 + 1578102*a*m**4 + 502521*m**4
        + 186048*a**5*m**3 + 1229088*a**4*m**3 + 3131160*a**3*m**3 + 3888852*a**2*m**3
        + 2376726*a*m**3 + 573381*m**3 + 104352*a**6*m**2 + 871200*a**5*m**2
        + 2875272*a**4*m**2 + 4841976*a**3*m**2 + 4422324*a**2*m**2 + 2086314*a*m**2
        + 394938*m**2 + 29376*a**7*m + 311520*a**6*m + 1316112*a**5*m + 2899848*a**4*m
        + 3626472*a**3*m + 2586900*a**2*m + 973332*a*m + 146070*m + 20844) - 3*(512*a**8
        + 6016*a**7 + 29952*a**6 + 82816*a**5 + 139488*a**4 + 146824*a**3 + 94288*a**2
        + 33624*a + 350*m**8 + 2800*a*m**7 + 4200*m**7 + 10060*a**2*m**6 + 29660*a*m**6
        + 21715*m**6 + 21160*a**3*m**5 + 92100*a**2*m**5 + 132630*a*m**5 + 63135*m**5
        + 28304*a**4*m**4 + 162408*a**3*m**4 + 345752*a**2*m**4 + 324098*a*m**4
        + 112693*m**4 + 24416*a**5*m**3 + 174256*a**4*m**3 + 489856*a**3*m**3
        + 679904*a**2*m**3 + 466210*a*m**3 + 126033*m**3 + 13120*a**6*m**2
        + 112608*a**5*m**2 + 394400*a**4*m**2 + 724032*a**3*m**2 + 736348*a**2*m**2
        + 393194*a*m**2 + 85778*m**2 + 3968*a**7*m + 40128*a**6*m + 169344*a**5*m
        + 387968*a**4*m + 522696*a**3*m + 414628*a**2*m + 178960*a*m + 32208*m + 5040))
    )


C1_DEN_LABELS = (
    '(k - 1)',
    'k',
    '(-2*alpha + k - 1)',
    '(-alpha + k - 1)',
    '(k - alpha)',
    '(alpha + k)',
    '(alpha + k + 1)',
    '(2*alpha + k + 1)',
    'degree-5 polynomial factor in k',
)


def c1_den(a, m, k):
    return (
        (k - 1),
        k,
        ( - 2*a + k - 1),
        ( - a + k - 1),
        (k - a),
        (a + k),
        (a + k + 1),
        (2*a + k + 1),
        (2*k**5*(2*a + 2*m + 3)**2 + 4*k**4*(20*a**2 + 62*a + 21*m**2 + 42*a*m
            + 63*m + 47) - k**3*(32*a**4 + 200*a**3 + 152*a**2 - 546*a + 36*m**4
            + 144*a*m**3 + 216*m**3 + 212*a**2*m**2 + 644*a*m**2 + 131*m**2 + 136*a**3*m
            + 628*a**2*m + 250*a*m - 579*m - 606) - k**2*(192*a**4 + 1232*a**3
            + 2328*a**2 + 942*a + 234*m**4 + 936*a*m**3 + 1404*m**3 + 1360*a**2*m**2
            + 4168*a*m**2 + 2401*m**2 + 848*a**3*m + 3992*a**2*m + 4670*a*m + 885*m
            - 482) - k*(352*a**4 + 2400*a**3 + 5376*a**2 + 4178*a + 500*m**4
            + 2000*a*m**3 + 3000*m**3 + 2848*a**2*m**2 + 8848*a*m**2 + 5925*m**2
            + 1696*a**3*m + 8240*a**2*m + 11394*a*m + 4275*m + 736) - 192*a**4
            - 1464*a**3 - 3656*a**2 - 3394*a - 350*m**4 - 1400*a*m**3 - 2100*m**3
            - 1940*a**2*m**2 - 6140*a*m**2 - 4355*m**2 - 1080*a**3*m - 5500*a**2*m
            - 8230*a*m - 3615*m - 974),
    )


def c2_num(a, m, k):
    return (
        (k + 3)*(k + 4)*( - 2*a + k - 2*m - 1)*(2*a + k + 2*m + 5)*(2*k**5*(2*a + 2*m
        + 3)**2 + 4*k**4*(m + 1)*(2*a + m + 2) - k**3*(32*a**4 + 200*a**3 + 472*a**2
        + 478*a + 36*m**4 + 144*a*m**3 + 216*m**3 + 212*a**2*m**2 + 644*a*m**2
        + 483*m**2 + 136*a**3*m + 628*a**2*m + 954*a*m + 477*m + 178) - k**2*(m
        + 1)*(32*a**3 + 136*a**2 + 186*a + 18*m**3 + 72*a*m**2 + 90*m**2 + 88*a**2*m
        + 232*a*m + 149*m + 82) + k*(32*a**4 + 128*a**3 + 192*a**2 + 126*a + 4*m**4
        + 16*a*m**3 + 24*m**3 + 48*a**2*m**2 + 96*a*m**2 + 59*m**2 + 64*a**3*m
        + 192*a**2*m + 190*a*m + 69*m + 32) + (m + 1)*(8*a**3 + 24*a**2 + 26*a + 2*m**3
        + 8*a*m**2 + 10*m**2 + 12*a**2*m + 28*a*m + 17*m + 10))
    )


C2_DEN_LABELS = (
    '(k - 1)',
    'k',
    '(-2*alpha + k - 1)',
    '(-alpha + k - 1)',
    '(k - alpha)',
    '(alpha + k)',
    '(alpha + k + 1)',
    '(2*alpha + k + 1)',
    'degree-5 polynomial factor in k',
)


def c2_den(a, m, k):
    return (
        (k - 1),
        k,
        ( - 2*a + k - 1),
        ( - a + k - 1),
        (k - a),
        (a + k),
        (a + k + 1),
        (2*a + k + 1),
        (2*k**5*(2*a + 2*m + 3)**2 + 4*k**4*(20*a**2 + 62*a + 21*m**2 + 42*a*m
            + 63*m + 47) - k**3*(32*a**4 + 200*a**3 + 152*a**2 - 546*a + 36*m**4
            + 144*a*m**3 + 216*m**3 + 212*a**2*m**2 + 644*a*m**2 + 131*m**2 + 136*a**3*m
            + 628*a**2*m + 250*a*m - 579*m - 606) - k**2*(192*a**4 + 1232*a**3
            + 2328*a**2 + 942*a + 234*m**4 + 936*a*m**3 + 1404*m**3 + 1360*a**2*m**2
            + 4168*a*m**2 + 2401*m**2 + 848*a**3*m + 3992*a**2*m + 4670*a*m + 885*m
            - 482) - k*(352*a**4 + 2400*a**3 + 5376*a**2 + 4178*a + 500*m**4
            + 2000*a*m**3 + 3000*m**3 + 2848*a**2*m**2 + 8848*a*m**2 + 5925*m**2
            + 1696*a**3*m + 8240*a**2*m + 11394*a*m + 4275*m + 736) - 192*a**4
            - 1464*a**3 - 3656*a**2 - 3394*a - 350*m**4 - 1400*a*m**3 - 2100*m**3
            - 1940*a**2*m**2 - 6140*a*m**2 - 4355*m**2 - 1080*a**3*m - 5500*a**2*m
            - 8230*a*m - 3615*m - 974),
    )


def g1_at_m1(a, m, k):
    return (
        96*(a + m - 1)*(a + m)*(a + m + 1)*(a + m + 2)
    )


def g2_at_m1(a, m, k):
    return (
        - 144*m*(a + m - 1)*(a + m)*(a + m + 1)*(a + m + 2)*(2*a + m + 1)
    )


def g3_at_m1(a, m, k):
    return (
        48*(a - 2)*(a - 1)*a*(a + 1)*(a + 2)*(a + 3)*(2*a*(a + 1) + 3*m*(2*a + m + 1))
    )


def g1p_at_m1(a, m, k):
    return (
        8*(2*(a*(a + 1)*(5*a*(a + 1) + 3) - 6) + 9*m**4 + 18*(2*a + 1)*m**3 + 5*(11*a*(a
        + 1) + 3)*m**2 + (2*a + 1)*(19*a*(a + 1) + 6)*m)
    )


def g2p_at_m1(a, m, k):
    return (
        4*( - 8*a**2*(a + 1)**2*(a**2 + a - 2) + 27*m**6 + 81*(2*a + 1)*m**5 + (366*a*(a
        + 1) - 45)*m**4 + 3*(2*a + 1)*(64*a*(a + 1) - 75)*m**3 + 6*(a*(a + 1)*(29*a*(a
        + 1) - 94) - 15)*m**2 + 6*(2*a + 1)*(a*(a + 1)*(a**2 + a - 17) + 6)*m)
    )


def g3p_at_m1(a, m, k):
    return (
        8*(2*a*(a + 1)*(a*(a + 1)*(a*(a + 1)*(7*a*(a + 1) + 1) - 156) + 108) + 3*(a*(a
        + 1)*(a*(a + 1)*(4*a*(a + 1) + 19) - 144) + 36)*m**2 + 3*(2*a + 1)*(a*(a
        + 1)*(a*(a + 1)*(4*a*(a + 1) + 19) - 144) + 36)*m)
    )


def g1_at_0(a, m, k):
    return (
        6*(2*a + 2*m + 1)**2*(4*a*(a + 1) + 3*m*(2*a + m + 1) - 2)
    )


def g2_at_0(a, m, k):
    return (
        3*m*(2*a + m + 1)*(4*a*(a + 1) + 5*m*(2*a + m + 1) + 2)*(4*a*(a + 1) + 3*m*(2*a
        + m + 1) - 2)
    )


def g3_at_0(a, m, k):
    return (
        6*(a - 1)*a*(a + 1)*(a + 2)*(2*a + 1)**2*(4*a*(a + 1) + 5*m*(2*a + m + 1) + 2)
    )


def n_m2(a, m, k):
    return (
        - ((1)/(8*(a - 1)**2*a**2*(a + 1)**2*(a + 2)**2*(2*a + 1)**2))*(18*a**5*m**4
        + 39*a**4*m**4 + 36*a**3*m**4 + 33*a**2*m**4 - 6*a*m**4 - 12*m**4 + 48*a**6*m**3
        + 132*a**5*m**3 + 222*a**4*m**3 + 264*a**3*m**3 + 66*a**2*m**3 - 60*a*m**3
        - 24*m**3 + 32*a**7*m**2 + 104*a**6*m**2 + 290*a**5*m**2 + 501*a**4*m**2
        + 320*a**3*m**2 - 5*a**2*m**2 - 50*a*m**2 - 4*m**2 + 88*a**6*m + 264*a**5*m
        + 238*a**4*m + 36*a**3*m - 6*a**2*m + 20*a*m + 8*m)
    )


def n_m3(a, m, k):
    return (
        - ((m*(2*a + m + 1))/(24*(a - 2)**2*(a - 1)**2*a**3*(a + 1)**3*(a + 2)**2*(a
        + 3)**2))*(88*a**8 + 352*a**7 + 40*a**6 - 1112*a**5 - 608*a**4 + 1048*a**3
        + 480*a**2 - 288*a + 5*a**6*m**4 + 15*a**5*m**4 + 89*a**4*m**4 + 153*a**3*m**4
        - 346*a**2*m**4 - 420*a*m**4 + 216*m**4 + 20*a**7*m**3 + 70*a**6*m**3
        + 386*a**5*m**3 + 790*a**4*m**3 - 1078*a**3*m**3 - 2372*a**2*m**3 + 24*a*m**3
        + 432*m**3 + 26*a**8*m**2 + 104*a**7*m**2 + 603*a**6*m**2 + 1445*a**5*m**2
        - 1083*a**4*m**2 - 4453*a**3*m**2 - 1022*a**2*m**2 + 1428*a*m**2 - 216*m**2
        + 12*a**9*m + 54*a**8*m + 388*a**7*m + 1106*a**6*m - 338*a**5*m - 3484*a**4*m
        - 1262*a**3*m + 2108*a**2*m + 120*a*m - 432*m)
    )


def a1(a, m, k):
    return (
        (((m - 1)*m*(2*a + m)*(2*a + m + 1))/(4*(a + m)*(2*a + 2*m - 1)*(2*a + 2*m
        + 1)))
    )


def a2(a, m, k):
    return (
        ((m*(2*a + m + 1)*(4*a**2 + 4*a + 3*m**2 + 6*a*m + 3*m))/(4*(a + m)*(a + m
        + 1)*(2*a + 2*m + 1)))
    )


def a3(a, m, k):
    return (
        ((m*(m + 1)*(2*a + m + 1)*(2*a + m + 2))/(4*(a + m + 1)*(2*a + 2*m + 1)*(2*a
        + 2*m + 3)))
    )


def a4(a, m, k):
    return (
        ((m*(2*a + m + 1))/((a + m)*(2*a + 2*m + 1)))
    )


def a5(a, m, k):
    return (
        ((m*(2*a + m + 1))/((a + m + 1)*(2*a + 2*m + 1)))
    )
# fmt: on
