"""Filter-bank coefficient tables.

Standard published decomposition/reconstruction filters, zero-padded to a
common length where the biorthogonal families need it. Values are stored at
full double precision; ``tests/test_filters.py`` checks each bank for perfect
reconstruction instead of trusting the transcription.
"""

FILTERS = {
    "haar": {
        "dec_lo": (
            0.7071067811865476,
            0.7071067811865476,
        ),
        "dec_hi": (
            -0.7071067811865476,
            0.7071067811865476,
        ),
        "rec_lo": (
            0.7071067811865476,
            0.7071067811865476,
        ),
        "rec_hi": (
            0.7071067811865476,
            -0.7071067811865476,
        ),
    },
    "db9": {
        "dec_lo": (
            3.93473203162716e-05,
            -0.0002519631889427101,
            0.00023038576352319597,
            0.0018476468830562265,
            -0.00428150368246343,
            -0.004723204757751397,
            0.022361662123679096,
            0.00025094711483145197,
            -0.06763282906132997,
            0.03072568147933338,
            0.14854074933810638,
            -0.09684078322297646,
            -0.2932737832791749,
            0.13319738582500756,
            0.6572880780513005,
            0.6048231236901112,
            0.24383467461259034,
            0.038077947363878345,
        ),
        "dec_hi": (
            -0.038077947363878345,
            0.24383467461259034,
            -0.6048231236901112,
            0.6572880780513005,
            -0.13319738582500756,
            -0.2932737832791749,
            0.09684078322297646,
            0.14854074933810638,
            -0.03072568147933338,
            -0.06763282906132997,
            -0.00025094711483145197,
            0.022361662123679096,
            0.004723204757751397,
            -0.00428150368246343,
            -0.0018476468830562265,
            0.00023038576352319597,
            0.0002519631889427101,
            3.93473203162716e-05,
        ),
        "rec_lo": (
            0.038077947363878345,
            0.24383467461259034,
            0.6048231236901112,
            0.6572880780513005,
            0.13319738582500756,
            -0.2932737832791749,
            -0.09684078322297646,
            0.14854074933810638,
            0.03072568147933338,
            -0.06763282906132997,
            0.00025094711483145197,
            0.022361662123679096,
            -0.004723204757751397,
            -0.00428150368246343,
            0.0018476468830562265,
            0.00023038576352319597,
            -0.0002519631889427101,
            3.93473203162716e-05,
        ),
        "rec_hi": (
            3.93473203162716e-05,
            0.0002519631889427101,
            0.00023038576352319597,
            -0.0018476468830562265,
            -0.00428150368246343,
            0.004723204757751397,
            0.022361662123679096,
            -0.00025094711483145197,
            -0.06763282906132997,
            -0.03072568147933338,
            0.14854074933810638,
            0.09684078322297646,
            -0.2932737832791749,
            -0.13319738582500756,
            0.6572880780513005,
            -0.6048231236901112,
            0.24383467461259034,
            -0.038077947363878345,
        ),
    },
    "sym9": {
        "dec_lo": (
            0.0014009155259146807,
            0.0006197808889855868,
            -0.013271967781817119,
            -0.01152821020767923,
            0.03022487885827568,
            0.0005834627461258068,
            -0.05456895843083407,
            0.238760914607303,
            0.717897082764412,
            0.6173384491409358,
            0.035272488035271894,
            -0.19155083129728512,
            -0.018233770779395985,
            0.06207778930288603,
            0.008859267493400484,
            -0.010264064027633142,
            -0.0004731544986800831,
            0.0010694900329086053,
        ),
        "dec_hi": (
            -0.0010694900329086053,
            -0.0004731544986800831,
            0.010264064027633142,
            0.008859267493400484,
            -0.06207778930288603,
            -0.018233770779395985,
            0.19155083129728512,
            0.035272488035271894,
            -0.6173384491409358,
            0.717897082764412,
            -0.238760914607303,
            -0.05456895843083407,
            -0.0005834627461258068,
            0.03022487885827568,
            0.01152821020767923,
            -0.013271967781817119,
            -0.0006197808889855868,
            0.0014009155259146807,
        ),
        "rec_lo": (
            0.0010694900329086053,
            -0.0004731544986800831,
            -0.010264064027633142,
            0.008859267493400484,
            0.06207778930288603,
            -0.018233770779395985,
            -0.19155083129728512,
            0.035272488035271894,
            0.6173384491409358,
            0.717897082764412,
            0.238760914607303,
            -0.05456895843083407,
            0.0005834627461258068,
            0.03022487885827568,
            -0.01152821020767923,
            -0.013271967781817119,
            0.0006197808889855868,
            0.0014009155259146807,
        ),
        "rec_hi": (
            0.0014009155259146807,
            -0.0006197808889855868,
            -0.013271967781817119,
            0.01152821020767923,
            0.03022487885827568,
            -0.0005834627461258068,
            -0.05456895843083407,
            -0.238760914607303,
            0.717897082764412,
            -0.6173384491409358,
            0.035272488035271894,
            0.19155083129728512,
            -0.018233770779395985,
            -0.06207778930288603,
            0.008859267493400484,
            0.010264064027633142,
            -0.0004731544986800831,
            -0.0010694900329086053,
        ),
    },
    "sym10": {
        "dec_lo": (
            0.0007701598091144901,
            9.563267072289475e-05,
            -0.008641299277022422,
            -0.0014653825813050513,
            0.0459272392310922,
            0.011609893903711381,
            -0.15949427888491757,
            -0.07088053578324385,
            0.47169066693843925,
            0.7695100370211071,
            0.38382676106708546,
            -0.03553674047381755,
            -0.0319900568824278,
            0.04999497207737669,
            0.005764912033581909,
            -0.02035493981231129,
            -0.0008043589320165449,
            0.004593173585311828,
            5.7036083618494284e-05,
            -0.0004593294210046588,
        ),
        "dec_hi": (
            0.0004593294210046588,
            5.7036083618494284e-05,
            -0.004593173585311828,
            -0.0008043589320165449,
            0.02035493981231129,
            0.005764912033581909,
            -0.04999497207737669,
            -0.0319900568824278,
            0.03553674047381755,
            0.38382676106708546,
            -0.7695100370211071,
            0.47169066693843925,
            0.07088053578324385,
            -0.15949427888491757,
            -0.011609893903711381,
            0.0459272392310922,
            0.0014653825813050513,
            -0.008641299277022422,
            -9.563267072289475e-05,
            0.0007701598091144901,
        ),
        "rec_lo": (
            -0.0004593294210046588,
            5.7036083618494284e-05,
            0.004593173585311828,
            -0.0008043589320165449,
            -0.02035493981231129,
            0.005764912033581909,
            0.04999497207737669,
            -0.0319900568824278,
            -0.03553674047381755,
            0.38382676106708546,
            0.7695100370211071,
            0.47169066693843925,
            -0.07088053578324385,
            -0.15949427888491757,
            0.011609893903711381,
            0.0459272392310922,
            -0.0014653825813050513,
            -0.008641299277022422,
            9.563267072289475e-05,
            0.0007701598091144901,
        ),
        "rec_hi": (
            0.0007701598091144901,
            -9.563267072289475e-05,
            -0.008641299277022422,
            0.0014653825813050513,
            0.0459272392310922,
            -0.011609893903711381,
            -0.15949427888491757,
            0.07088053578324385,
            0.47169066693843925,
            -0.7695100370211071,
            0.38382676106708546,
            0.03553674047381755,
            -0.0319900568824278,
            -0.04999497207737669,
            0.005764912033581909,
            0.02035493981231129,
            -0.0008043589320165449,
            -0.004593173585311828,
            5.7036083618494284e-05,
            0.0004593294210046588,
        ),
    },
    "coif3": {
        "dec_lo": (
            -3.459977319727278e-05,
            -7.0983302506379e-05,
            0.0004662169598204029,
            0.0011175187708306303,
            -0.0025745176881367972,
            -0.009007976136730624,
            0.015880544863669452,
            0.03455502757329774,
            -0.08230192710629983,
            -0.07179982161915484,
            0.42848347637737,
            0.7937772226260872,
            0.40517690240911824,
            -0.06112339000297255,
            -0.06577191128146936,
            0.023452696142077168,
            0.007782596425672746,
            -0.003793512864380802,
        ),
        "dec_hi": (
            0.003793512864380802,
            0.007782596425672746,
            -0.023452696142077168,
            -0.06577191128146936,
            0.06112339000297255,
            0.40517690240911824,
            -0.7937772226260872,
            0.42848347637737,
            0.07179982161915484,
            -0.08230192710629983,
            -0.03455502757329774,
            0.015880544863669452,
            0.009007976136730624,
            -0.0025745176881367972,
            -0.0011175187708306303,
            0.0004662169598204029,
            7.0983302506379e-05,
            -3.459977319727278e-05,
        ),
        "rec_lo": (
            -0.003793512864380802,
            0.007782596425672746,
            0.023452696142077168,
            -0.06577191128146936,
            -0.06112339000297255,
            0.40517690240911824,
            0.7937772226260872,
            0.42848347637737,
            -0.07179982161915484,
            -0.08230192710629983,
            0.03455502757329774,
            0.015880544863669452,
            -0.009007976136730624,
            -0.0025745176881367972,
            0.0011175187708306303,
            0.0004662169598204029,
            -7.0983302506379e-05,
            -3.459977319727278e-05,
        ),
        "rec_hi": (
            -3.459977319727278e-05,
            7.0983302506379e-05,
            0.0004662169598204029,
            -0.0011175187708306303,
            -0.0025745176881367972,
            0.009007976136730624,
            0.015880544863669452,
            -0.03455502757329774,
            -0.08230192710629983,
            0.07179982161915484,
            0.42848347637737,
            -0.7937772226260872,
            0.40517690240911824,
            0.06112339000297255,
            -0.06577191128146936,
            -0.023452696142077168,
            0.007782596425672746,
            0.003793512864380802,
        ),
    },
    "coif5": {
        "dec_lo": (
            -9.604010112767894e-08,
            -1.6237995172048338e-07,
            2.0612203985788783e-06,
            3.7007277113394796e-06,
            -2.1270221672515614e-05,
            -4.12198619242655e-05,
            0.00014035632812373243,
            0.0003018579416682448,
            -0.0006375589261258812,
            -0.0016616273039298788,
            0.0024315754425382886,
            0.006761520220620417,
            -0.009159507338676163,
            -0.019758391600965465,
            0.032674799467057355,
            0.041287530472117834,
            -0.10556315130733723,
            -0.06203775157498196,
            0.4379823066591634,
            0.7742936228603274,
            0.42157126673075435,
            -0.052046670253554764,
            -0.09192158806008609,
            0.028169744270532353,
            0.023408322118927783,
            -0.010131584846900276,
            -0.00415931262757864,
            0.0021782943778456947,
            0.0003585777411617577,
            -0.000212081862067494,
        ),
        "dec_hi": (
            0.000212081862067494,
            0.0003585777411617577,
            -0.0021782943778456947,
            -0.00415931262757864,
            0.010131584846900276,
            0.023408322118927783,
            -0.028169744270532353,
            -0.09192158806008609,
            0.052046670253554764,
            0.42157126673075435,
            -0.7742936228603274,
            0.4379823066591634,
            0.06203775157498196,
            -0.10556315130733723,
            -0.041287530472117834,
            0.032674799467057355,
            0.019758391600965465,
            -0.009159507338676163,
            -0.006761520220620417,
            0.0024315754425382886,
            0.0016616273039298788,
            -0.0006375589261258812,
            -0.0003018579416682448,
            0.00014035632812373243,
            4.12198619242655e-05,
            -2.1270221672515614e-05,
            -3.7007277113394796e-06,
            2.0612203985788783e-06,
            1.6237995172048338e-07,
            -9.604010112767894e-08,
        ),
        "rec_lo": (
            -0.000212081862067494,
            0.0003585777411617577,
            0.0021782943778456947,
            -0.00415931262757864,
            -0.010131584846900276,
            0.023408322118927783,
            0.028169744270532353,
            -0.09192158806008609,
            -0.052046670253554764,
            0.42157126673075435,
            0.7742936228603274,
            0.4379823066591634,
            -0.06203775157498196,
            -0.10556315130733723,
            0.041287530472117834,
            0.032674799467057355,
            -0.019758391600965465,
            -0.009159507338676163,
            0.006761520220620417,
            0.0024315754425382886,
            -0.0016616273039298788,
            -0.0006375589261258812,
            0.0003018579416682448,
            0.00014035632812373243,
            -4.12198619242655e-05,
            -2.1270221672515614e-05,
            3.7007277113394796e-06,
            2.0612203985788783e-06,
            -1.6237995172048338e-07,
            -9.604010112767894e-08,
        ),
        "rec_hi": (
            -9.604010112767894e-08,
            1.6237995172048338e-07,
            2.0612203985788783e-06,
            -3.7007277113394796e-06,
            -2.1270221672515614e-05,
            4.12198619242655e-05,
            0.00014035632812373243,
            -0.0003018579416682448,
            -0.0006375589261258812,
            0.0016616273039298788,
            0.0024315754425382886,
            -0.006761520220620417,
            -0.009159507338676163,
            0.019758391600965465,
            0.032674799467057355,
            -0.041287530472117834,
            -0.10556315130733723,
            0.06203775157498196,
            0.4379823066591634,
            -0.7742936228603274,
            0.42157126673075435,
            0.052046670253554764,
            -0.09192158806008609,
            -0.028169744270532353,
            0.023408322118927783,
            0.010131584846900276,
            -0.00415931262757864,
            -0.0021782943778456947,
            0.0003585777411617577,
            0.000212081862067494,
        ),
    },
    "bior2.8": {
        "dec_lo": (
            0.0,
            0.0015105430506304422,
            -0.0030210861012608843,
            -0.012947511862546647,
            0.02891610982635418,
            0.05299848189069094,
            -0.13491307360773605,
            -0.16382918343409023,
            0.46257144047591653,
            0.9516421218971786,
            0.46257144047591653,
            -0.16382918343409023,
            -0.13491307360773605,
            0.05299848189069094,
            0.02891610982635418,
            -0.012947511862546647,
            -0.0030210861012608843,
            0.0015105430506304422,
        ),
        "dec_hi": (
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.3535533905932738,
            -0.7071067811865476,
            0.3535533905932738,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
        ),
        "rec_lo": (
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.3535533905932738,
            0.7071067811865476,
            0.3535533905932738,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
        ),
        "rec_hi": (
            0.0,
            -0.0015105430506304422,
            -0.0030210861012608843,
            0.012947511862546647,
            0.02891610982635418,
            -0.05299848189069094,
            -0.13491307360773605,
            0.16382918343409023,
            0.46257144047591653,
            -0.9516421218971786,
            0.46257144047591653,
            0.16382918343409023,
            -0.13491307360773605,
            -0.05299848189069094,
            0.02891610982635418,
            0.012947511862546647,
            -0.0030210861012608843,
            -0.0015105430506304422,
        ),
    },
    "rbio2.8": {
        "dec_lo": (
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.3535533905932738,
            0.7071067811865476,
            0.3535533905932738,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
            0.0,
        ),
        "dec_hi": (
            -0.0015105430506304422,
            -0.0030210861012608843,
            0.012947511862546647,
            0.02891610982635418,
            -0.05299848189069094,
            -0.13491307360773605,
            0.16382918343409023,
            0.46257144047591653,
            -0.9516421218971786,
            0.46257144047591653,
            0.16382918343409023,
            -0.13491307360773605,
            -0.05299848189069094,
            0.02891610982635418,
            0.012947511862546647,
            -0.0030210861012608843,
            -0.0015105430506304422,
            0.0,
        ),
        "rec_lo": (
            0.0015105430506304422,
            -0.0030210861012608843,
            -0.012947511862546647,
            0.02891610982635418,
            0.05299848189069094,
            -0.13491307360773605,
            -0.16382918343409023,
            0.46257144047591653,
            0.9516421218971786,
            0.46257144047591653,
            -0.16382918343409023,
            -0.13491307360773605,
            0.05299848189069094,
            0.02891610982635418,
            -0.012947511862546647,
            -0.0030210861012608843,
            0.0015105430506304422,
            0.0,
        ),
        "rec_hi": (
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.3535533905932738,
            -0.7071067811865476,
            0.3535533905932738,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
            0.0,
            -0.0,
        ),
    },
    "bior6.8": {
        "dec_lo": (
            0.0,
            0.0019088317364812906,
            -0.0019142861290887667,
            -0.016990639867602342,
            0.01193456527972926,
            0.04973290349094079,
            -0.07726317316720414,
            -0.09405920349573646,
            0.4207962846098268,
            0.8259229974584023,
            0.4207962846098268,
            -0.09405920349573646,
            -0.07726317316720414,
            0.04973290349094079,
            0.01193456527972926,
            -0.016990639867602342,
            -0.0019142861290887667,
            0.0019088317364812906,
        ),
        "dec_hi": (
            -0.0,
            0.0,
            -0.0,
            0.014426282505624435,
            -0.014467504896790148,
            -0.07872200106262882,
            0.04036797903033992,
            0.41784910915027457,
            -0.7589077294536541,
            0.41784910915027457,
            0.04036797903033992,
            -0.07872200106262882,
            -0.014467504896790148,
            0.014426282505624435,
            -0.0,
            0.0,
            -0.0,
            0.0,
        ),
        "rec_lo": (
            0.0,
            0.0,
            0.0,
            0.014426282505624435,
            0.014467504896790148,
            -0.07872200106262882,
            -0.04036797903033992,
            0.41784910915027457,
            0.7589077294536541,
            0.41784910915027457,
            -0.04036797903033992,
            -0.07872200106262882,
            0.014467504896790148,
            0.014426282505624435,
            0.0,
            0.0,
            0.0,
            0.0,
        ),
        "rec_hi": (
            0.0,
            -0.0019088317364812906,
            -0.0019142861290887667,
            0.016990639867602342,
            0.01193456527972926,
            -0.04973290349094079,
            -0.07726317316720414,
            0.09405920349573646,
            0.4207962846098268,
            -0.8259229974584023,
            0.4207962846098268,
            0.09405920349573646,
            -0.07726317316720414,
            -0.04973290349094079,
            0.01193456527972926,
            0.016990639867602342,
            -0.0019142861290887667,
            -0.0019088317364812906,
        ),
    },
    "dmey": {
        "dec_lo": (
            0.0,
            -1.009999956941423e-12,
            8.519459636796214e-09,
            -1.111944952595278e-08,
            -1.0798819539621958e-08,
            6.066975741351135e-08,
            -1.0866516536735883e-07,
            8.200680650386481e-08,
            1.1783004497663934e-07,
            -5.506340565252278e-07,
            1.1307947017916706e-06,
            -1.489549216497156e-06,
            7.367572885903746e-07,
            3.20544191334478e-06,
            -1.6312699734552807e-05,
            6.554305930575149e-05,
            -0.0006011502343516092,
            -0.002704672124643725,
            0.002202534100911002,
            0.006045814097323304,
            -0.006387718318497156,
            -0.011061496392513451,
            0.015270015130934803,
            0.017423434103729693,
            -0.03213079399021176,
            -0.024348745906078023,
            0.0637390243228016,
            0.030655091960824263,
            -0.13284520043622938,
            -0.035087555656258346,
            0.44459300275757724,
            0.7445855923188063,
            0.44459300275757724,
            -0.035087555656258346,
            -0.13284520043622938,
            0.030655091960824263,
            0.0637390243228016,
            -0.024348745906078023,
            -0.03213079399021176,
            0.017423434103729693,
            0.015270015130934803,
            -0.011061496392513451,
            -0.006387718318497156,
            0.006045814097323304,
            0.002202534100911002,
            -0.002704672124643725,
            -0.0006011502343516092,
            6.554305930575149e-05,
            -1.6312699734552807e-05,
            3.20544191334478e-06,
            7.367572885903746e-07,
            -1.489549216497156e-06,
            1.1307947017916706e-06,
            -5.506340565252278e-07,
            1.1783004497663934e-07,
            8.200680650386481e-08,
            -1.0866516536735883e-07,
            6.066975741351135e-08,
            -1.0798819539621958e-08,
            -1.111944952595278e-08,
            8.519459636796214e-09,
            -1.009999956941423e-12,
        ),
        "dec_hi": (
            1.009999956941423e-12,
            8.519459636796214e-09,
            1.111944952595278e-08,
            -1.0798819539621958e-08,
            -6.066975741351135e-08,
            -1.0866516536735883e-07,
            -8.200680650386481e-08,
            1.1783004497663934e-07,
            5.506340565252278e-07,
            1.1307947017916706e-06,
            1.489549216497156e-06,
            7.367572885903746e-07,
            -3.20544191334478e-06,
            -1.6312699734552807e-05,
            -6.554305930575149e-05,
            -0.0006011502343516092,
            0.002704672124643725,
            0.002202534100911002,
            -0.006045814097323304,
            -0.006387718318497156,
            0.011061496392513451,
            0.015270015130934803,
            -0.017423434103729693,
            -0.03213079399021176,
            0.024348745906078023,
            0.0637390243228016,
            -0.030655091960824263,
            -0.13284520043622938,
            0.035087555656258346,
            0.44459300275757724,
            -0.7445855923188063,
            0.44459300275757724,
            0.035087555656258346,
            -0.13284520043622938,
            -0.030655091960824263,
            0.0637390243228016,
            0.024348745906078023,
            -0.03213079399021176,
            -0.017423434103729693,
            0.015270015130934803,
            0.011061496392513451,
            -0.006387718318497156,
            -0.006045814097323304,
            0.002202534100911002,
            0.002704672124643725,
            -0.0006011502343516092,
            -6.554305930575149e-05,
            -1.6312699734552807e-05,
            -3.20544191334478e-06,
            7.367572885903746e-07,
            1.489549216497156e-06,
            1.1307947017916706e-06,
            5.506340565252278e-07,
            1.1783004497663934e-07,
            -8.200680650386481e-08,
            -1.0866516536735883e-07,
            -6.066975741351135e-08,
            -1.0798819539621958e-08,
            1.111944952595278e-08,
            8.519459636796214e-09,
            1.009999956941423e-12,
            0.0,
        ),
        "rec_lo": (
            -1.009999956941423e-12,
            8.519459636796214e-09,
            -1.111944952595278e-08,
            -1.0798819539621958e-08,
            6.066975741351135e-08,
            -1.0866516536735883e-07,
            8.200680650386481e-08,
            1.1783004497663934e-07,
            -5.506340565252278e-07,
            1.1307947017916706e-06,
            -1.489549216497156e-06,
            7.367572885903746e-07,
            3.20544191334478e-06,
            -1.6312699734552807e-05,
            6.554305930575149e-05,
            -0.0006011502343516092,
            -0.002704672124643725,
            0.002202534100911002,
            0.006045814097323304,
            -0.006387718318497156,
            -0.011061496392513451,
            0.015270015130934803,
            0.017423434103729693,
            -0.03213079399021176,
            -0.024348745906078023,
            0.0637390243228016,
            0.030655091960824263,
            -0.13284520043622938,
            -0.035087555656258346,
            0.44459300275757724,
            0.7445855923188063,
            0.44459300275757724,
            -0.035087555656258346,
            -0.13284520043622938,
            0.030655091960824263,
            0.0637390243228016,
            -0.024348745906078023,
            -0.03213079399021176,
            0.017423434103729693,
            0.015270015130934803,
            -0.011061496392513451,
            -0.006387718318497156,
            0.006045814097323304,
            0.002202534100911002,
            -0.002704672124643725,
            -0.0006011502343516092,
            6.554305930575149e-05,
            -1.6312699734552807e-05,
            3.20544191334478e-06,
            7.367572885903746e-07,
            -1.489549216497156e-06,
            1.1307947017916706e-06,
            -5.506340565252278e-07,
            1.1783004497663934e-07,
            8.200680650386481e-08,
            -1.0866516536735883e-07,
            6.066975741351135e-08,
            -1.0798819539621958e-08,
            -1.111944952595278e-08,
            8.519459636796214e-09,
            -1.009999956941423e-12,
            0.0,
        ),
        "rec_hi": (
            0.0,
            1.009999956941423e-12,
            8.519459636796214e-09,
            1.111944952595278e-08,
            -1.0798819539621958e-08,
            -6.066975741351135e-08,
            -1.0866516536735883e-07,
            -8.200680650386481e-08,
            1.1783004497663934e-07,
            5.506340565252278e-07,
            1.1307947017916706e-06,
            1.489549216497156e-06,
            7.367572885903746e-07,
            -3.20544191334478e-06,
            -1.6312699734552807e-05,
            -6.554305930575149e-05,
            -0.0006011502343516092,
            0.002704672124643725,
            0.002202534100911002,
            -0.006045814097323304,
            -0.006387718318497156,
            0.011061496392513451,
            0.015270015130934803,
            -0.017423434103729693,
            -0.03213079399021176,
            0.024348745906078023,
            0.0637390243228016,
            -0.030655091960824263,
            -0.13284520043622938,
            0.035087555656258346,
            0.44459300275757724,
            -0.7445855923188063,
            0.44459300275757724,
            0.035087555656258346,
            -0.13284520043622938,
            -0.030655091960824263,
            0.0637390243228016,
            0.024348745906078023,
            -0.03213079399021176,
            -0.017423434103729693,
            0.015270015130934803,
            0.011061496392513451,
            -0.006387718318497156,
            -0.006045814097323304,
            0.002202534100911002,
            0.002704672124643725,
            -0.0006011502343516092,
            -6.554305930575149e-05,
            -1.6312699734552807e-05,
            -3.20544191334478e-06,
            7.367572885903746e-07,
            1.489549216497156e-06,
            1.1307947017916706e-06,
            5.506340565252278e-07,
            1.1783004497663934e-07,
            -8.200680650386481e-08,
            -1.0866516536735883e-07,
            -6.066975741351135e-08,
            -1.0798819539621958e-08,
            1.111944952595278e-08,
            8.519459636796214e-09,
            1.009999956941423e-12,
        ),
    },
}
