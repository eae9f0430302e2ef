"""Reference values frozen from mpmath at 40 digits.

F and G were evaluated as y*2F1(1/p, 1/q; 1+1/q; +-y^q) and inverted by
bisection.  Rows are

    SIN:  (p, q, x, sin_{p,q}(x), cos_{p,q}(x))
    SINH: (p, q, x, sinh_{p,q}(x))

with x at 0.1, 0.5, 0.9 and 0.99 of the branch (3.0 when it is unbounded).
"""

SIN = [
    (2, 3, 0.14021821053254543, 0.14016989996046558, 0.99862204950306487),
    (2, 3, 0.7010910526627271, 0.6716186674727344, 0.83489632284721726),
    (2, 3, 1.2619638947929088, 0.9853262654388169, 0.20827483705897466),
    (2, 3, 1.3881602842721996, 0.9998525486484194, 0.021030664094227643),
    (3, 2, 0.12935547796148952, 0.12911471040274308, 0.99441196252065755),
    (3, 2, 0.6467773898074476, 0.6157874612775269, 0.85307115203256813),
    (3, 2, 1.1641993016534058, 0.9643141735134232, 0.41232110959711122),
    (3, 2, 1.2806192318187464, 0.9988675835831776, 0.13129959724023787),
    (1.5, 0.5, 0.45, 0.3202534548608747, 0.57330656844345853),
    (1.5, 0.5, 2.25, 0.8930824225001248, 0.14457120928416939),
    (1.5, 0.5, 4.05, 0.9991561609825725, 0.0056261870869160488),
    (1.5, 0.5, 4.455, 0.999999156249911, 5.6250011865239829e-5),
    (0.8, 2, 0.30000000000000004, 0.28930153872430503, 0.89649907369889071),
    (0.8, 2, 1.5, 0.8657662374412374, 0.17717349072614167),
    (0.8, 2, 2.7, 0.9663233873575595, 0.033591483412411775),
    (0.8, 2, 2.9699999999999998, 0.9740671460703874, 0.024350915473338331),
    (1, 1, 0.30000000000000004, 0.2591817793182822, 0.74081822068171783),
    (1, 1, 1.5, 0.7768698398515702, 0.22313016014842983),
    (1, 1, 2.7, 0.9327944872602503, 0.067205512739749753),
    (1, 1, 2.9699999999999998, 0.9486966896680809, 0.051303310331919133),
    (5, 6, 0.10585119348682587, 0.10585118923277827, 0.99999971867735631),
    (5, 6, 0.5292559674341293, 0.5289227154096933, 0.99558205120549318),
    (5, 6, 0.9526607413814328, 0.9298836819361047, 0.81222565331674285),
    (5, 6, 1.047926815519576, 0.9959840755553439, 0.47371332948989597),
    (0.4, 0.5, 0.30000000000000004, 0.13891896841266022, 0.31164234103228345),
    (0.4, 0.5, 1.5, 0.3482573311891974, 0.10754904148199185),
    (0.4, 0.5, 2.7, 0.44657001076424696, 0.063386689483784981),
    (0.4, 0.5, 2.9699999999999998, 0.46290354774084613, 0.05775881980659104),
    (1.2, 1.5, 0.44516506980892223, 0.40429762353640775, 0.78065018818010594),
    (1.2, 1.5, 2.225825349044611, 0.9802776003567791, 0.052976229992912681),
    (1.2, 1.5, 4.0064856282803, 0.9999987332959083, 1.7072819379601911e-5),
    (1.2, 1.5, 4.40713419110833, 0.9999999999987333, 1.7072827103244717e-10),
    (1.2, 3, 0.2804364210650909, 0.2791566189320509, 0.98183832624504415),
    (1.2, 3, 1.4021821053254544, 0.9614997135382722, 0.16024995225637864),
    (1.2, 3, 2.523927789585818, 0.999997466595828, 5.4202651239631727e-5),
    (1.2, 3, 2.7763205685443997, 0.9999999999974666, 5.4202847407353897e-10),
    (4, 4, 0.11107207345395917, 0.11107122817350448, 0.9999619485602737),
    (4, 4, 0.5553603672697958, 0.552693864900054, 0.97580814599232128),
    (4, 4, 0.9996486610856324, 0.9429522468135141, 0.67646026634250941),
    (4, 4, 1.0996135271941956, 0.9973208802127139, 0.32142274896403543),
]
SINH = [
    (2, 3, 0.28043642106509087, 0.28121076204612808),
    (2, 3, 1.4021821053254542, 1.9999999999999997),
    (2, 3, 2.5239277895858176, 50.861678435184521),
    (2, 3, 2.7763205685443992, 5086.1733658078859),
    (3, 2, 0.30000000000000004, 0.30298235068920574),
    (3, 2, 1.5, 1.8361082215530373),
    (3, 2, 2.7, 4.4216194219476685),
    (3, 2, 2.9699999999999998, 5.2011994215115648),
    (1.5, 0.5, 0.30000000000000004, 0.37451701370280409),
    (1.5, 0.5, 1.5, 2.3493854189309494),
    (1.5, 0.5, 2.7, 4.7713507720778979),
    (1.5, 0.5, 2.9699999999999998, 5.3638098104610144),
    (0.8, 2, 0.11981402347355924, 0.12053664963970004),
    (0.8, 2, 0.5990701173677961, 0.71247055850097537),
    (0.8, 2, 1.078326211262033, 3.025267471327987),
    (0.8, 2, 1.1861588323882364, 14.550222606129315),
    (1, 1, 0.30000000000000004, 0.34985880757600316),
    (1, 1, 1.5, 3.4816890703380648),
    (1, 1, 2.7, 13.879731724872837),
    (1, 1, 2.9699999999999998, 18.491919596031113),
    (5, 6, 0.5952232389545398, 0.59597544521299228),
    (5, 6, 2.9761161947726986, 13.384452281370509),
    (5, 6, 5.357009150590858, 41826.413613967959),
    (5, 6, 5.892710065649943, 4182641361.3969173),
    (0.4, 0.5, 0.2666666666666668, 0.77463305641429899),
    (0.4, 0.5, 1.333333333333334, 53.156630344099385),
    (0.4, 0.5, 2.400000000000001, 49877.112763328869),
    (0.4, 0.5, 2.640000000000001, 506175002.1111329),
    (1.2, 1.5, 0.4451650698089221, 0.49287411874622213),
    (1.2, 1.5, 2.2258253490446105, 10.282157212906347),
    (1.2, 1.5, 4.0064856282802985, 6518.6138232444232),
    (1.2, 1.5, 4.407134191108328, 65186197.212132644),
    (1.2, 3, 0.14021821053254543, 0.14029881279025762),
    (1.2, 3, 0.7010910526627271, 0.75747399321351485),
    (1.2, 3, 1.2619638947929088, 2.804285270359965),
    (1.2, 3, 1.3881602842721996, 13.12302531986326),
    (4, 4, 0.30000000000000004, 0.30012140451537592),
    (4, 4, 1.5, 1.788743223568138),
    (4, 4, 2.7, 5.9738491573260787),
    (4, 4, 2.9699999999999998, 7.825783589730407),
]
