"""Published benchmark values used by tests, the self-check and the demos.

``SHIFT_PARAMS_L1[l][k]`` holds ``E_k - E_k^C`` for ``Q = 2``, ``p = 5``;
``DIPOLE_CHANNELS[m]`` lists ``(gamma, [-E_0, -E_1, -E_2, -E_3])`` for ``Q = 1``,
``d = 5``, ``p = 3``.  All were computed with 150 basis functions at ``rho = 2``.
"""

SHIFT_PARAMS = {"Q": 2.0, "p": 5.0, "basis_size": 150, "rho": 2.0}
CHANNEL_PARAMS = {"Q": 1.0, "d": 5.0, "p": 3.0, "basis_size": 150, "rho": 2.0}

QUADRUPOLE_SHIFTS = {
    0: [1.689836518, 0.337411507, 0.123110800, 0.058497441,
        0.032357265, 0.019771611, 0.012964075, 0.008960226],
    1: [0.251015112, 0.084819527, 0.038411932, 0.020566781,
        0.012276277, 0.007908751, 0.005391547, 0.003839389],
    2: [0.050288629, 0.021878946, 0.011425659, 0.006704777,
        0.004266330, 0.002881243, 0.002036676, 0.001492591],
    3: [0.011582200, 0.005967795, 0.003470897, 0.002194508,
        0.001474931, 0.001038673, 0.000758897, 0.000571260],
}

DIPOLE_CHANNELS = {
    0: [
        (0.904753862, [0.088604373, 0.044160252, 0.026297735, 0.017415888]),
        (2.351197519, [0.041574253, 0.025056330, 0.016731035, 0.011957498]),
        (3.172671646, [0.027927569, 0.018272110, 0.012878292, 0.009562772]),
        (4.073926412, [0.019185950, 0.013415538, 0.009904961, 0.007611586]),
    ],
    1: [
        (1.973702871, [0.050720257, 0.029200677, 0.018946465, 0.013277165]),
        (3.095983541, [0.028917932, 0.018793782, 0.013185974, 0.009759184]),
        (4.060300322, [0.019286713, 0.013474421, 0.009942300, 0.007636732]),
        (5.034941193, [0.013648539, 0.010052469, 0.007710801, 0.006101341]),
    ],
    2: [
        (1.539965664, [0.064078256, 0.034819564, 0.021813636, 0.014931773]),
        (2.966289119, [0.030706849, 0.019723198, 0.013729065, 0.010103555]),
        (4.023558622, [0.019562282, 0.013635068, 0.010043998, 0.007705129]),
        (5.022510687, [0.013704236, 0.010087660, 0.007734435, 0.006117972]),
    ],
}

# one supercritical (t <= 0) channel each at m = 0 and m = 1 is left out of DIPOLE_CHANNELS
CHANNEL_EXCLUDED = {0: 1, 1: 1, 2: 0}

# Finite-basis sizes N + 1 of the l = 1 states k = 0, 1, 2, 4, 7, 10 (Q = 2, p = 5)
BASIS_SIZES_L1 = {0: 3, 1: 4, 2: 5, 4: 7, 7: 10, 10: 13}
