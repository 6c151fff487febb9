#!/usr/bin/env python3
"""Regenerate the bundled lexicon/gazetteer data files.

Base vocabularies live in this script. Inflected forms (noun plurals,
verb -s forms, irregular pasts) are expanded into the lexicon, and a lemma
exception is emitted for every bundled or derivable form the suffix rules
cannot reduce to its base. Run from the repo root:

    python tools/build_lexicon_data.py
"""

from __future__ import annotations

import sys
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"
sys.path.insert(0, str(SRC))

from wordstream.nlp.lemma import Lemmatizer  # noqa: E402
from wordstream.nlp.lexicon import Lexicon  # noqa: E402
from wordstream.types import PosTag  # noqa: E402

OUT_DIR = SRC / "wordstream" / "nlp" / "data"

NOUNS = """
person student teacher instructor professor doctor nurse lawyer engineer scientist
researcher artist author writer editor manager director president leader worker
employee employer farmer driver pilot soldier officer guard chef waiter
customer client patient visitor guest friend neighbor stranger partner colleague
boss assistant secretary clerk agent dealer vendor merchant trader banker investor
founder owner tenant landlord citizen resident native immigrant refugee tourist
traveler passenger pedestrian athlete player coach referee champion winner loser
opponent rival enemy ally hero villain victim witness suspect thief jury
defendant expert specialist consultant advisor mentor tutor pupil graduate
candidate applicant volunteer member chairman spokesman fan audience crowd
community family parent mother father mom dad brother sister son daughter child
baby infant toddler teenager adult elder grandmother grandfather uncle aunt nephew
niece cousin husband wife spouse bride groom widow heir twin sibling king queen
prince princess duke knight emperor minister mayor governor senator
head face eye ear nose mouth tooth tongue lip cheek chin forehead hair neck
shoulder arm elbow wrist hand finger thumb chest heart lung stomach liver kidney
brain nerve muscle bone skeleton spine rib hip leg knee ankle foot toe heel skin
blood vein artery cell organ tissue throat voice breath
sun moon star planet earth world sky cloud rain snow ice wind storm thunder
lightning fog mist dew frost hail rainbow season spring summer autumn winter
weather climate temperature heat sunshine shade shadow fire flame smoke ash dust
sand soil dirt mud rock stone pebble mountain hill valley cliff cave canyon plain
field meadow forest wood tree branch trunk root leaf flower petal seed fruit berry
grass bush shrub vine moss fern river stream creek lake pond ocean sea wave tide
shore beach coast island peninsula bay gulf desert jungle swamp marsh glacier
volcano earthquake flood drought horizon landscape nature environment
animal dog cat bird fish horse cow pig sheep goat chicken duck goose turkey rabbit
mouse rat squirrel deer bear wolf fox lion tiger elephant monkey ape snake lizard
turtle frog toad insect bug bee wasp ant mosquito butterfly moth spider worm snail
crab lobster shrimp whale dolphin shark eagle hawk owl crow raven sparrow robin
pigeon seagull penguin bat camel donkey mule zebra giraffe hippo rhino kangaroo
koala panda otter beaver skunk raccoon hedgehog bull calf lamb kitten puppy pet
herd flock nest cage zoo
food meal breakfast lunch dinner supper snack dish recipe ingredient bread toast
butter cheese milk cream yogurt egg meat beef pork ham bacon sausage steak rice
pasta noodle pizza sandwich burger soup salad sauce spice salt pepper sugar honey
jam flour dough cake cookie pie pudding dessert candy chocolate apple banana
orange grape lemon lime peach pear plum cherry strawberry melon watermelon
pineapple mango coconut vegetable potato tomato onion garlic carrot pea bean corn
cabbage lettuce spinach broccoli cucumber pumpkin mushroom nut almond walnut
peanut drink water juice coffee tea soda beer wine bottle glass cup mug plate
bowl spoon fork knife napkin oven stove fridge pan pot kettle
house home apartment flat building room bedroom bathroom kitchen hall hallway
corridor stair floor ceiling wall window door gate roof chimney garage basement
attic balcony porch yard garden fence lawn furniture table chair desk sofa couch
bench bed mattress pillow blanket sheet curtain carpet rug mirror shelf cabinet
drawer closet wardrobe lamp light bulb candle clock watch key lock handle box bag
basket bucket jar tin container lid tool hammer nail screw screwdriver wrench
drill saw ladder rope chain wire cord string thread needle pin glue tape brush
broom mop sponge soap shampoo towel toothbrush razor comb machine device gadget
appliance vacuum washer dryer board picture painting photograph frame vase plant
toy doll ball balloon kite puzzle game card
shirt blouse sweater jacket coat suit dress skirt hat cap scarf glove mitten sock
shoe boot sandal slipper belt button zipper pocket sleeve collar uniform costume
fashion style fabric cloth clothes cotton wool silk leather jewelry ring necklace
bracelet earring wallet purse umbrella backpack luggage suitcase
city town village suburb neighborhood district street road avenue lane alley
highway freeway bridge tunnel intersection corner sidewalk crosswalk traffic
billboard park plaza market mall store shop supermarket bakery pharmacy bank
hospital clinic school college university library museum theater cinema stadium
arena gym pool restaurant cafe bar hotel motel inn church temple mosque cathedral
castle palace tower skyscraper factory warehouse office headquarters station
airport port harbor dock terminal platform track rail railway subway metro bus
train tram taxi cab car truck van vehicle motorcycle bicycle bike scooter boat
ship ferry yacht canoe kayak plane airplane aircraft jet helicopter rocket engine
motor wheel tire brake pedal fuel gasoline petrol diesel battery journey trip
voyage cruise tour vacation holiday destination map route path trail direction
distance mile kilometer
idea concept thought theory principle rule law method approach technique strategy
plan project task assignment homework exam test quiz question answer problem
solution result outcome effect cause reason purpose goal objective aim target
mission vision value belief opinion view perspective attitude emotion feeling
mood sense logic argument debate discussion conversation dialogue speech lecture
presentation report essay paper article journal magazine newspaper book novel
story tale poem poetry chapter page paragraph sentence word letter alphabet
symbol digit figure chart graph diagram data information knowledge wisdom fact
truth detail evidence proof example instance case sample pattern trend statistic
average percentage ratio fraction decimal math mathematics algebra geometry
calculus science physics chemistry biology astronomy geology psychology sociology
anthropology philosophy history geography economics finance business marketing
accounting engineering technology computer laptop keyboard screen monitor printer
scanner software hardware program application app website internet network server
database file folder document email message chat forum blog post comment link
password username account profile setting update version code algorithm function
variable loop array list stack queue feature error crash backup cloud storage
memory disk drive processor chip circuit sensor robot drone frequency radiation
energy power force gravity mass weight speed velocity acceleration momentum
pressure volume density area length width height depth size shape circle triangle
rectangle sphere cube cylinder cone angle line curve point edge surface center
middle top bottom side front back
time moment instant second minute hour day night morning afternoon evening noon
midnight today tomorrow yesterday week weekend month year decade century
millennium era age period phase stage step process progress schedule calendar
date deadline appointment event occasion ceremony celebration festival party
wedding funeral birthday anniversary
society culture tradition custom habit routine lifestyle population nation
country state government politics policy election vote campaign congress
parliament senate court justice crime punishment prison jail army navy war peace
battle conflict violence weapon gun bomb bullet sword shield defense attack
security safety danger risk threat emergency disaster accident injury wound
damage harm loss death birth life health disease illness sickness infection
virus medicine pill vaccine treatment therapy surgery recovery cure symptom
fever pain ache headache cough flu allergy stress anxiety depression happiness
joy pleasure fun entertainment amusement hobby interest passion love hate anger
fear surprise disgust sadness grief sorrow hope faith trust doubt courage bravery
pride shame guilt honor respect dignity freedom liberty duty responsibility
obligation permission approval refusal denial agreement contract deal promise
offer request demand instruction advice suggestion recommendation warning notice
announcement news media press television radio film movie music song melody
rhythm lyric instrument piano guitar violin drum trumpet flute orchestra band
concert album singer dancer actor actress scene script plot theme genre art
sculpture sketch drawing design color camera image video clip sport soccer
football basketball baseball tennis golf hockey cricket rugby volleyball team
league tournament championship medal trophy prize award score
job career profession occupation trade industry company corporation firm
enterprise startup institution agency department division staff crew union salary
wage income revenue profit cost price budget expense tax fee fine bill invoice
receipt payment purchase sale discount bargain refund loan debt credit mortgage
investment stock share bond fund asset property estate wealth fortune poverty
economy product service brand label logo advertisement consumer buyer seller
shopper cart checkout delivery shipment parcel mail envelope stamp address
meeting conference seminar workshop interview resume pension bonus equipment
material resource inventory
education classroom course curriculum lesson subject topic grade degree diploma
certificate scholarship tuition campus dormitory semester syllabus textbook
notebook pen pencil eraser marker chalk blackboard whiteboard laboratory
experiment research discovery invention patent analysis summary review feedback
response prompt draft revision reference source citation quote index appendix
glossary definition translation grammar vocabulary spelling pronunciation accent
language dialect thing way man woman money group number part lot name level air
ability access achievement action activity addition advance advantage adventure
airline ambition amount apology appearance appetite architect architecture
arrival aspect atmosphere attempt attention attraction authority background
badge barrier behavior benefit bias blade breakthrough breeze brick broadcast
brochure burden cabin cable cafeteria campaign canal capacity capital captain
carbon cargo carpenter cartoon category challenge chance chaos charity charm
chess childhood chore chorus civilization classmate clue cluster coal coalition
coin colony column comedy commerce commission committee companion comparison
compass complaint compliment component compound concern conclusion confidence
confusion connection consequence contact content contest context continent
contrast convention copper crop crystal cycle decision delight departure
deposit desire destiny diamond diary dimension dinosaur discipline dishwasher
distribution dove dozen dragon drama driveway dusk echo electricity elevator
emphasis empire employment encounter encyclopedia entrance entry episode
equation equator essence evidence evolution exception excitement exhibit exit
expansion expedition experience explanation explosion extension extent facility
factor failure fame fantasy fate feather fiber fiction fleet flesh flight foam
focus folk formula fossil foundation fountain fragment frontier frustration
furnace galaxy gallery gallon gap garment gear gender generation genius gesture
glimpse glory grain grandparent gratitude grocery guidance guideline habitat
harmony harvest hazard heritage highlight hint hood horn horror host household
humor hydrogen hygiene identity illustration imagination impact importance
impression incident independence influence innovation input insight inspection
inspiration instinct institute insurance intelligence intention interaction
interior interpretation interval invitation iron item jaw jazz jewel judgment
jug junction junior kingdom landmark laughter layer layout leadership legacy
legend leisure lifetime limb limit lineup liquid literature litter lobby lumber
luxury machinery magic magnet maintenance majority manner manufacturer marathon
margin masterpiece mate meaning membership memorial merchandise mercy merit
metal midnight migration milestone mineral ministry minority miracle mixture
mode molecule monument motion motivation motive mystery myth narrative
nationality necessity nectar nightmare nitrogen noise notion novelty nursery
nutrition obstacle offspring opera opportunity opposition option orbit orchard
organism origin ornament outfit outline output oxygen pace package panel panic
parade paradise parish participant particle partnership passage pattern pause
peak peasant penalty perception performance personality phenomenon philosopher
phrase physician pier pile pioneer pipe pity poet poison portion portrait
possession possibility postage posture poultry powder prairie precision
preference presence prestige priest priority privacy privilege procedure
proportion proposal prospect prosperity protein protest province provision
publicity pyramid quality quantity quarter quest quota radius rage rally ranch
range rank rate ray reaction reality realm rebellion reception recognition
reform region relationship relief religion remark remedy rental reputation
requirement reservation retreat reunion revenge reward riddle ridge riot ritual
roadmap romance rubber rumor sake satellite scenario scent scheme scholar scope
sector sequence session shortage signature silence silver situation skill
slavery slope solidarity soul spectrum speculation spirit splendor sponsor
squad stability standard statue status steam steel stem stereotype stitch
strength structure studio substance summit surplus survey suspicion sympathy
syndrome syntax synthesis tactic talent tendency tension term territory
testimony texture theft threshold thrill timber tone torch tragedy transaction
transition treasure treaty tribe tribute triumph troop tune twilight tyranny
unity universe usage utility variation variety venture verdict verse vessel
veteran victory villa vineyard virtue vitamin warmth warrior welfare wheat
wilderness workout worship wrath wreck youth zone
""".split()

VERBS = """
have go say make know think take see come give find tell become show leave
feel put keep begin seem help talk turn start want look use work call try ask
move live believe hold bring happen write provide sit stand lose pay meet
include continue set learn change lead understand watch follow stop create speak
read allow add spend grow open walk win offer remember love consider appear buy
wait serve die send expect build stay fall cut reach kill remain suggest raise
pass sell require report decide pull return explain hope develop carry break
receive agree support hit produce eat cover catch draw choose cause listen
realize involve push analyze argue assume avoid bake balance ban behave belong
bend bet blame blend bless block blow boil borrow bounce bow breathe burn burst
bury calculate cancel capture care celebrate charge chase cheat check cheer chew
claim clap clean climb cling collect combine comfort communicate compare compete
complain compose conclude confirm confuse connect consist contain contribute
convert convince cook copy count crack crawl criticize cry dance dare deal
decorate defend define delay deliver deny depend describe deserve destroy
determine devote dig disagree disappear discover discuss dislike distribute
divide dominate drag dream drift drink drive drop drown dry earn educate embrace
emerge employ enable encourage engage enjoy enter entertain escape establish
estimate examine exchange excite excuse exercise exist expand explore express
extend fail feed fight fill finish fit fix flee float flow fly fold forget
forgive form freeze frighten fry gain gather generate glance glow grab greet
guarantee guess hang hate heal hear hesitate hide hire hug hunt hurry hurt
identify ignore imagine impress improve increase indicate inform injure insist
inspire install intend interrupt introduce invent invest investigate invite join
jump justify kick kiss kneel knit knock land laugh launch lay lean leap lend lie
lift load maintain manage marry matter measure melt mention miss mix mount mourn
multiply nod obey observe obtain occur operate oppose organize owe own pack
participate perform persuade pick play plead pour practice praise pray predict
prefer prepare press pretend prevent proceed promote pronounce propose protect
prove publish pump punish pursue qualify quit quote react recall recognize
recommend reduce refer reflect refuse regard register regret reject relate relax
release relieve rely remind remove rent repair repeat replace reply represent
rescue resist resolve respond rest restore retire reveal ride ring rise roar
roast rob roll rub ruin run rush sail satisfy save scare scatter scream seek
seize select separate settle sew shake shine shoot shout shrink shut sigh sing
sink ski skip slam sleep slice slide slip smash smell smile snap sneeze snore
soak solve spell spill spin spit split spoil spray spread squeeze stare starve
steal steer stir stretch struggle study submit succeed suck suffer surround
survive swallow swear sweep swell swim teach tear tease tempt tend terrify thank
threaten throw tie tighten translate transfer transform travel treat tremble
undergo unite unlock upset urge vanish vary visit wander warn wash weaken wear
weep weigh welcome whisper wipe wish wonder worry wrap wrestle yawn yell
""".split()

ADJECTIVES = """
good new first last long great little own other old right big high different
small large next early young important few public bad same able best better sure
free low late hard major strong possible whole true easy clear recent certain
personal red white black brown blue green yellow pink purple gray golden bright
dark deep flat wide narrow thick thin tall heavy fast slow quick quiet loud
silent calm gentle soft rough smooth sharp dull dirty neat tidy messy fresh
stale sweet sour bitter salty spicy delicious tasty hungry thirsty full empty
rich poor cheap expensive busy lazy tired sleepy awake alive dead sick healthy
weak happy sad angry mad glad proud ashamed jealous nervous anxious worried
scared afraid brave bold shy timid polite rude kind cruel nice friendly lonely
alone married single divorced honest dishonest loyal fair unfair equal unequal
safe careful careless funny silly stupid smart clever wise foolish
crazy sane normal strange weird odd common rare unusual typical ordinary special
unique perfect final initial primary secondary main central local national
international global foreign domestic urban rural modern ancient classic
traditional contemporary current absent ready willing eager reluctant impatient
confident humble arrogant generous selfish greedy warm cool cold hot mild severe
extreme moderate harsh tender tough firm loose tight stiff flexible fragile
sturdy solid hollow dense sparse broad vast huge enormous giant tiny massive
immense slight subtle hidden visible invisible transparent opaque blurry vivid
pale bleak gloomy cheerful merry jolly pleasant unpleasant awful terrible
horrible dreadful wonderful fantastic amazing interesting boring exciting
confusing surprising astonishing incredible unbelievable remarkable significant
minor trivial crucial vital essential unnecessary optional mandatory urgent
immediate gradual sudden steady stable unstable constant frequent occasional
regular irregular annual temporary permanent brief lengthy eternal endless
infinite finite limited unlimited partial entire overall general specific
particular precise exact accurate inaccurate approximate relevant irrelevant
related unrelated similar identical distinct diverse various numerous multiple
double triple dual solo joint mutual individual collective combined united
divided independent dependent reliable unreliable capable efficient inefficient
productive useless valuable worthless affordable profitable
anonymous popular unpopular favorite beloved dear precious sacred holy divine
evil wicked guilty innocent legal illegal lawful unlawful criminal civil
military political economic social cultural historical scientific technical
digital electronic mechanical electrical chemical physical mental emotional
spiritual intellectual academic educational professional amateur skilled
unskilled qualified unqualified proper improper appropriate inappropriate
suitable unsuitable convenient inconvenient cozy luxurious plain fancy elegant
graceful awkward clumsy pretty ugly
""".split()

ADVERBS = """
very really quite rather fairly too also just only even still almost nearly
indeed certainly definitely probably possibly perhaps maybe surely obviously
clearly apparently evidently naturally frankly honestly seriously truly actually
basically essentially generally usually normally typically often frequently
sometimes occasionally rarely seldom never always ever forever constantly
continuously repeatedly again twice now soon later today tomorrow yesterday
tonight here there everywhere somewhere anywhere nowhere away abroad overseas
upstairs downstairs nearby far ahead forward backward upward downward together
apart aside well badly slowly quickly hardly barely scarcely merely simply
literally absolutely completely totally entirely fully partly partially mostly
mainly largely somewhat slightly moderately extremely incredibly terribly
awfully highly deeply strongly widely greatly especially particularly
specifically exactly precisely approximately roughly relatively comparatively
increasingly gradually suddenly immediately instantly quietly loudly softly
gently carefully carelessly easily daily weekly monthly yearly anyway anyhow
however therefore thus hence meanwhile moreover furthermore nevertheless
nonetheless otherwise instead else then not how why
""".split()

DETERMINERS = """
the a an this that these those each every either neither some any no all both
half such what which whose another my your his her its our their much many more
most several enough
""".split()

CONJUNCTIONS = """
and or but nor so yet although though because since unless while whereas if than
whether once when whenever where wherever
""".split()

PREPOSITIONS = """
of for as in on at by with from to into onto upon about above below under over between
among through during within without against along across behind beyond beneath
beside besides despite except inside outside near toward towards underneath via
per off down up around past after before until till amid amidst throughout
concerning regarding unlike like
""".split()

PRONOUNS = """
i you he she it we they me him us them myself yourself himself herself itself
ourselves yourselves themselves mine yours hers ours theirs who whom whoever
someone anyone everyone nobody somebody anybody everybody something anything
everything nothing none oneself
""".split()

NUMBER_WORDS = """
zero one two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty fifty
sixty seventy eighty ninety hundred thousand million billion trillion
""".split()

OTHER_WORDS = """
okay ok yes yeah hello hi hey bye goodbye please thanks oh wow oops huh ah uh um
""".split()

AUXILIARIES = """
be am is are was were been being will would shall should can could may might
must ought cannot
""".split()

CONTRACTIONS = """
i'm i've i'd i'll you're you've you'll you'd he's he'll he'd she's she'll she'd
it's it'll we're we've we'll we'd they're they've they'll they'd that's there's
here's what's who's let's don't doesn't didn't won't wouldn't can't couldn't
shouldn't isn't aren't wasn't weren't hasn't haven't hadn't mustn't needn't
ain't o'clock
""".split()

# (past, past participle, base); participle equal to past may be omitted.
IRREGULAR_VERBS = [
    ("was", "been", "be"), ("had", "had", "have"), ("did", "done", "do"),
    ("went", "gone", "go"), ("said", "said", "say"), ("made", "made", "make"),
    ("knew", "known", "know"), ("thought", "thought", "think"),
    ("took", "taken", "take"), ("saw", "seen", "see"), ("came", "come", "come"),
    ("got", "gotten", "get"), ("gave", "given", "give"),
    ("found", "found", "find"), ("told", "told", "tell"),
    ("became", "become", "become"), ("showed", "shown", "show"),
    ("left", "left", "leave"), ("felt", "felt", "feel"), ("put", "put", "put"),
    ("kept", "kept", "keep"), ("began", "begun", "begin"),
    ("wrote", "written", "write"), ("stood", "stood", "stand"),
    ("heard", "heard", "hear"), ("let", "let", "let"),
    ("meant", "meant", "mean"), ("met", "met", "meet"), ("ran", "run", "run"),
    ("paid", "paid", "pay"), ("sat", "sat", "sit"),
    ("spoke", "spoken", "speak"), ("led", "led", "lead"),
    ("grew", "grown", "grow"), ("lost", "lost", "lose"),
    ("fell", "fallen", "fall"), ("sent", "sent", "send"),
    ("built", "built", "build"), ("understood", "understood", "understand"),
    ("drew", "drawn", "draw"), ("broke", "broken", "break"),
    ("spent", "spent", "spend"), ("rose", "risen", "rise"),
    ("drove", "driven", "drive"), ("bought", "bought", "buy"),
    ("wore", "worn", "wear"), ("chose", "chosen", "choose"),
    ("ate", "eaten", "eat"), ("fought", "fought", "fight"),
    ("sold", "sold", "sell"), ("caught", "caught", "catch"),
    ("threw", "thrown", "throw"), ("dealt", "dealt", "deal"),
    ("won", "won", "win"), ("forgot", "forgotten", "forget"),
    ("sang", "sung", "sing"), ("swam", "swum", "swim"),
    ("taught", "taught", "teach"), ("slept", "slept", "sleep"),
    ("flew", "flown", "fly"), ("drank", "drunk", "drink"),
    ("rode", "ridden", "ride"), ("brought", "brought", "bring"),
    ("held", "held", "hold"), ("shook", "shaken", "shake"),
    ("fed", "fed", "feed"), ("hid", "hidden", "hide"),
    ("shot", "shot", "shoot"), ("stole", "stolen", "steal"),
    ("struck", "struck", "strike"), ("swung", "swung", "swing"),
    ("tore", "torn", "tear"), ("woke", "woken", "wake"),
    ("froze", "frozen", "freeze"), ("hung", "hung", "hang"),
    ("bore", "borne", "bear"), ("beat", "beaten", "beat"),
    ("bent", "bent", "bend"), ("bet", "bet", "bet"), ("bit", "bitten", "bite"),
    ("blew", "blown", "blow"), ("burst", "burst", "burst"),
    ("cast", "cast", "cast"), ("cost", "cost", "cost"), ("dug", "dug", "dig"),
    ("hit", "hit", "hit"), ("hurt", "hurt", "hurt"),
    ("knelt", "knelt", "kneel"), ("laid", "laid", "lay"),
    ("lent", "lent", "lend"), ("lit", "lit", "light"),
    ("quit", "quit", "quit"), ("rang", "rung", "ring"),
    ("sought", "sought", "seek"), ("shone", "shone", "shine"),
    ("sank", "sunk", "sink"), ("slid", "slid", "slide"),
    ("spun", "spun", "spin"), ("stuck", "stuck", "stick"),
    ("stung", "stung", "sting"), ("swore", "sworn", "swear"),
    ("swept", "swept", "sweep"), ("wept", "wept", "weep"),
    ("withdrew", "withdrawn", "withdraw"),
    ("cut", "cut", "cut"), ("read", "read", "read"), ("spread", "spread", "spread"),
    ("shut", "shut", "shut"), ("split", "split", "split"), ("rid", "rid", "rid"),
]

IRREGULAR_PLURALS = {
    "man": "men", "woman": "women", "child": "children", "person": "people",
    "foot": "feet", "tooth": "teeth", "mouse": "mice", "goose": "geese",
    "analysis": "analyses", "crisis": "crises", "thesis": "theses",
    "basis": "bases", "hypothesis": "hypotheses", "phenomenon": "phenomena",
    "criterion": "criteria", "matrix": "matrices", "vertex": "vertices",
    "axis": "axes", "index": "indices", "life": "lives", "knife": "knives",
    "wife": "wives", "leaf": "leaves", "shelf": "shelves", "wolf": "wolves",
    "half": "halves", "calf": "calves", "loaf": "loaves", "thief": "thieves",
    "self": "selves", "scarf": "scarves", "sheep": "sheep", "deer": "deer",
    "fish": "fish", "species": "species", "series": "series", "news": "news",
    "clothes": "clothes", "mathematics": "mathematics", "physics": "physics",
    "economics": "economics", "politics": "politics",
}

# Nouns that really take -es after a final o.
O_ES_PLURALS = {"hero", "potato", "tomato", "echo", "veto", "volcano", "mosquito"}

IRREGULAR_3SG = {"have": "has"}

# Verbs that double the final consonant before -ing/-ed.
DOUBLING_VERBS = {
    "run", "sit", "set", "get", "put", "cut", "hit", "fit", "quit", "plan",
    "stop", "shop", "drop", "chat", "grab", "hug", "jog", "nod", "pat", "rub",
    "skip", "slip", "step", "stir", "swim", "trim", "wrap", "ban", "bet", "dig",
    "rob", "slam", "snap", "spit", "occur", "prefer", "refer", "admit",
    "commit", "permit", "submit", "regret", "drag", "beg", "clap", "drip",
    "flip", "grin", "grip", "hop", "mop", "pin", "plug", "scan", "shrug",
    "sip", "spin", "tap", "tip", "wag",
}

STOPLIST = sorted(
    set(AUXILIARIES)
    | set(CONTRACTIONS)
    | {
        "am", "is", "are", "was", "were", "been", "being", "be",
        "have", "has", "had", "having", "do", "does", "did", "doing", "done",
        "not",
    }
)

GAZETTEER_PERSON = """
aaron abigail adam adrian aiden alan albert alex alexa alexander alexandra
alfred alice alicia allison alyssa amanda amber amelia amy andrea andrew angela
angelina anita ann anna anne annie anthony antonio april arthur ashley aubrey
audrey austin ava barbara barry beatrice becky bella ben benjamin bernard beth
betty beverly bill billy blake bob bobby bonnie brad bradley brandon brenda
brian brittany brooke bruce bryan caleb cameron camila candace carl carla
carlos carmen carol caroline carolyn carrie carter casey cassandra catherine
cathy cecilia chad charles charlie charlotte chelsea cheryl chloe chris
christian christina christine christopher cindy claire clara clarence claudia
clifford clyde cody colin connie connor cora corey craig crystal curtis cynthia
dale dan dana daniel daniela danielle danny darlene darrell darren dave david
dawn dean deborah debra denise dennis derek derrick diana diane diego dolores
dominic don donald donna doris dorothy doug douglas duane dustin dylan earl ed
eddie edgar edith edward edwin eileen elaine eleanor elena eli elias elijah
elizabeth ella ellen emily emma eric erica erik erin ernest esther ethan eugene
eva evan evelyn everett felicia felix fernando fiona florence frances francis
francisco frank franklin fred frederick gabriel gabriela gail garrett gary
gavin gene geoffrey george gerald gilbert gina giovanni glen glenn gloria
gordon grace graham grant greg gregory gwen hannah harold harriet harry harvey
hazel heather hector heidi helen henry herbert holly howard hugh hunter ian
irene iris isaac isabel isabella isaiah ivan jack jackie jackson jacob
jacqueline jaime james jamie jan jane janet janice jared jasmine jason javier
jay jean jeff jeffrey jenna jennifer jenny jeremy jerome jerry jesse jessica
jill jim jimmy joan joanna joanne jocelyn joe joel joey john johnny jon
jonathan jordan jorge jose joseph josephine josh joshua joyce juan judith judy
julia julian julie june justin kaitlyn karen kate katelyn katherine kathleen
kathryn kathy katie kayla keith kelly ken kendra kenneth kevin kim kimberly
kirk kristen kristin kristina kyle lacey lance larry laura lauren laurie
lawrence leah lee leo leon leonard leslie levi lewis liam lillian lily linda
lindsay lisa logan lois lola lonnie loretta lori lorraine louis louise lucas
lucia lucille lucy luis luke lydia lynn mabel mackenzie madeline madison mae
maggie malcolm mandy marc marcia marcus margaret maria marian marie marilyn
mario marion marissa mark marlene marsha marshall martha martin marvin mary
mason matt matthew maureen max maxine maya megan melanie melinda melissa melody
meredith mia michael micheal michelle miguel mike mildred miles milton miranda
miriam mitchell molly monica morgan nancy naomi natalie nathan nathaniel neil
nelson nicholas nick nicole nina noah nolan nora norma norman oliver olivia
omar oscar owen pablo paige pamela patricia patrick paul paula pauline pearl
pedro peggy penelope percy perry pete peter phil philip phillip phoebe phyllis
preston priscilla rachel ralph ramon randall randy raul ray raymond rebecca
regina reginald renee rex rhonda ricardo richard rick ricky rita rob robert
roberta roberto rodney roger roland ron ronald rosa rose rosemary ross roxanne
roy ruben ruby rudy russell ruth ryan sabrina sally sam samantha samuel sandra
sandy sara sarah scott sean sebastian serena seth shane shannon sharon shawn
sheila shelby shelley sherry shirley sidney silvia simon sofia sonia sophia
sophie spencer stacey stacy stanley stella stephanie stephen steve steven
stewart stuart sue susan suzanne sydney sylvia tamara tammy tanya tara taylor
ted teresa terrance terri terry thelma theodore theresa thomas tiffany tim
timothy tina toby todd tom tommy toni tony tracey tracy travis trevor tricia
troy tyler valerie vanessa vera verna vernon veronica victor victoria vincent
viola violet virginia vivian wade walter wanda warren wayne wendy wesley willie
winifred yolanda yvonne zachary zoe nguyen smith johnson williams jones garcia
miller davis rodriguez martinez hernandez lopez gonzalez anderson moore perez
thompson harris sanchez clark ramirez robinson walker wright torres flores
adams bennett campbell carter cooper cox diaz edwards evans gomez gutierrez
hughes jimenez mendoza morales murphy myers ortiz patel peterson phillips
ramos reed reyes richardson rivera roberts rogers ruiz sanders stewart turner
ward watson
""".split()

GAZETTEER_PLACE = """
africa antarctica asia australia europe america
afghanistan albania algeria andorra angola argentina armenia austria azerbaijan
bahamas bahrain bangladesh barbados belarus belgium belize benin bhutan bolivia
bosnia botswana brazil brunei bulgaria burundi cambodia cameroon canada chad
chile china colombia congo croatia cuba cyprus denmark djibouti dominica
ecuador egypt eritrea estonia ethiopia fiji finland france gabon gambia georgia
germany ghana greece greenland grenada guatemala guinea guyana haiti honduras
hungary iceland india indonesia iran iraq ireland israel italy jamaica japan
jordan kazakhstan kenya kiribati kosovo kuwait kyrgyzstan laos latvia lebanon
lesotho liberia libya liechtenstein lithuania luxembourg madagascar malawi
malaysia maldives mali malta mauritania mauritius mexico micronesia moldova
monaco mongolia montenegro morocco mozambique myanmar namibia nauru nepal
netherlands nicaragua niger nigeria norway oman pakistan palau panama paraguay
peru philippines poland portugal qatar romania russia rwanda samoa senegal
serbia seychelles singapore slovakia slovenia somalia spain sudan suriname
sweden switzerland syria taiwan tajikistan tanzania thailand togo tonga tunisia
turkey turkmenistan tuvalu uganda ukraine uruguay uzbekistan vanuatu venezuela
vietnam yemen zambia zimbabwe
alabama alaska arizona arkansas california colorado connecticut delaware
florida hawaii idaho illinois indiana iowa kansas kentucky louisiana maine
maryland massachusetts michigan minnesota mississippi missouri montana nebraska
nevada ohio oklahoma oregon pennsylvania tennessee texas utah vermont virginia
washington wisconsin wyoming
amsterdam athens atlanta auckland baghdad baltimore bangkok barcelona beijing
belfast berlin bogota boston brisbane brussels bucharest budapest buffalo cairo
calgary cambridge canberra caracas casablanca chicago cincinnati cleveland
copenhagen dallas damascus delhi denver detroit dubai dublin edinburgh
frankfurt geneva glasgow guangzhou hamburg hanoi harare havana helsinki houston
indianapolis istanbul jakarta jerusalem johannesburg kabul karachi kathmandu
kiev kingston kolkata kyoto lagos lahore lima lisbon liverpool london madrid
manchester manila marseille melbourne memphis miami milan minneapolis
monterrey montreal moscow mumbai munich nagoya nairobi naples nashville
orlando osaka oslo ottawa oxford paris perth philadelphia phoenix pittsburgh
portland prague pretoria pyongyang quito reykjavik riyadh rome rotterdam
sacramento salem santiago sapporo sarajevo seattle seoul shanghai shenzhen
stockholm stuttgart sydney taipei tehran tokyo toronto tripoli tucson tulsa
valencia vancouver venice vienna warsaw wellington winnipeg yokohama zurich
arctic sahara himalayas alps andes rockies everest kilimanjaro nile danube
thames seine rhine volga yangtze mediterranean atlantic pacific caribbean
baltic adriatic aegean scandinavia balkans siberia patagonia
abuja accra adelaide algiers almaty amman ankara antwerp asuncion bamako
bandung basel bergen bern bilbao birmingham bologna bonn bordeaux bratislava
bremen bristol brno bruges cardiff cartagena cebu changsha chengdu chennai
chittagong chongqing cologne colombo cordoba cusco daegu dakar dalian davao
dhaka doha donetsk dortmund dresden duisburg dundee durban dusseldorf essen
florence fortaleza fukuoka gdansk genoa ghent gothenburg granada graz
guadalajara guayaquil gwangju haifa halifax hamilton hangzhou hanover harbin
hiroshima hobart hue ibadan incheon innsbruck irkutsk izmir jaipur jeddah
jinan kanpur kaohsiung kazan khartoum kobe krakow kunming kyiv leeds leicester
leipzig lille luanda lublin lucknow lyon malaga managua mandalay maputo
maracaibo marrakesh mashhad mecca medan medellin mombasa monrovia montevideo
mosul multan murcia muscat mysore nanjing nantes newcastle nice nicosia
novosibirsk nuremberg odessa oulu padua palermo pattaya penang pisa plovdiv
porto potsdam poznan pune pusan qingdao quebec quezon rabat recife regina riga
rosario rouen salvador salzburg samara santos seville sheffield shenyang
shiraz sofia southampton strasbourg surabaya suzhou tabriz tallinn tampere
tangier tashkent tbilisi tianjin tijuana toulouse trieste tunis turin utrecht
vilnius vladivostok wuhan xian yerevan zagreb
""".split()

GAZETTEER_PLACE_MULTI = """
new york # city and state
new jersey
new mexico
new hampshire
new orleans
new delhi
new zealand
north carolina
south carolina
north dakota
south dakota
west virginia
rhode island
los angeles
san francisco
san diego
san antonio
san jose
las vegas
kansas city
salt lake city
hong kong
sri lanka
saudi arabia
south africa
south korea
north korea
costa rica
puerto rico
el salvador
united states
united kingdom
great britain
middle east
latin america
buenos aires
mexico city
cape town
tel aviv
abu dhabi
kuala lumpur
saint petersburg
czech republic
dominican republic
papua new guinea
ivory coast
sierra leone
burkina faso
""".splitlines()

GAZETTEER_ORG = """
google microsoft github myspace apple amazon facebook twitter instagram youtube
netflix spotify linkedin reddit tiktok snapchat whatsapp telegram pinterest
tumblr flickr yelp uber lyft airbnb dropbox slack zoom skype paypal shopify
ebay etsy alibaba tencent baidu huawei xiaomi samsung sony nintendo sega atari
panasonic toshiba hitachi fujitsu nikon kodak xerox ibm intel amd nvidia
qualcomm broadcom cisco oracle sap salesforce adobe autodesk vmware redhat
mozilla ubuntu debian tesla spacex boeing airbus lockheed northrop raytheon
ford toyota honda nissan mazda subaru hyundai kia volkswagen audi bmw mercedes
porsche ferrari lamborghini volvo chevrolet chrysler cadillac jeep dodge
bentley exxon chevron aramco gazprom walmart costco kroger walgreens safeway
aldi lidl carrefour tesco ikea nike adidas puma reebok zara uniqlo gucci prada
chanel dior hermes versace armani burberry rolex cartier mcdonalds wendys kfc
chipotle dominos starbucks dunkin pepsi pepsico nestle unilever kraft heinz
kellogg danone pfizer moderna novartis roche merck bayer astrazeneca gsk sanofi
abbott medtronic visa mastercard citibank hsbc barclays santander ubs fidelity
vanguard blackrock deloitte accenture mckinsey kpmg pwc infosys wipro capgemini
nasa esa noaa nih cdc fbi cia nsa darpa epa fda irs unesco unicef nato interpol
imf wto opec oecd asean harvard stanford mit yale princeton berkeley caltech
cornell dartmouth georgetown gonzaga ucla nyu baylor purdue rutgers vanderbilt
emory tufts reuters bloomberg cnn bbc nbc abc cbs espn hbo disney pixar
dreamworks paramount hulu vimeo twitch discord activision ubisoft capcom konami
bandai roblox fifa uefa nba nfl mlb nhl olympics greenpeace amnesty wikipedia
wikimedia craigslist quora substack patreon kickstarter indiegogo gofundme
coinbase binance robinhood verizon tmobile vodafone nokia ericsson motorola htc
lg asus acer lenovo dell hp compaq logitech razer seagate sandisk zillow redfin
expedia tripadvisor lufthansa qantas ryanair easyjet delta fedex dhl usps
maersk honeywell siemens bosch philips 3m dupont basf monsanto cargill nabisco
mondelez heineken carlsberg guinness budweiser smirnoff bacardi gatorade
polaroid casio seiko timex swatch garmin fitbit gopro dji oneplus oppo vivo
realme zte meizu sanyo jvc yamaha kawasaki suzuki ducati vespa peugeot renault
citroen fiat skoda opel saab maserati infiniti acura lexus daewoo tata mahindra
geely byd nio rivian polestar scania komatsu kubota hilti makita dewalt ryobi
stihl husqvarna electrolux dyson roomba irobot miele frigidaire maytag kenmore
haier midea beko vestel zanussi indesit hotpoint bissell tsinghua waseda
sorbonne epfl insead wharton juilliard colgate palmolive gillette amgen gilead
biogen regeneron lilly takeda astellas eisai teva mylan allergan celgene
illumina danaher stryker cerner athenahealth telefonica telstra comcast
directv klm jal cathay etihad airasia spicejet vistara wizzair finnair bnp
paribas natwest lloyds rbc scotiabank bmo cibc anz westpac nab macquarie
nomura mizuho mufg icbc hdfc icici sbi kotak ferrero cadbury hershey lindt
toblerone milka oreo pringles doritos cheetos fritos nutella kitkat twix
skittles haribo wrigley mentos ajax juventus bayern borussia celtic lakers
celtics knicks dodgers yankees mets steelers seahawks astros phillies
accor aegon aetna ahold alcoa allianz alstom anthem aon asml atos aviva axa
bhp bombardier bouygues bridgestone canon chubb cigna citigroup corning
cummins daikin daimler denso eaton enel engie eni equinor essilor exelon
fanuc firestone fujifilm glencore goodyear halliburton hubspot humana hynix
hyatt iberdrola infineon itau jpmorgan kaspersky kyocera lafarge loreal
lukoil marriott mattel michelin mitsubishi mitsui nasdaq nec netapp nielsen
nordstrom nucor omron pemex petrobras petronas rakuten repsol ricoh rosneft
safran sainsbury sandvik schlumberger schneider shimano sinopec softbank
sodexo statoil suncor symantec sysco thales thyssenkrupp unicredit veolia
vivendi wabtec wartsila westinghouse weyerhaeuser yandex
""".split()

GAZETTEER_ORG_MULTI = """
coca cola
red cross
red bull
general motors
general electric
goldman sachs
morgan stanley
wells fargo
new york times
wall street journal
world bank
united nations
european union
red hat
epic games
rolls royce
burger king
home depot
best buy
white house
novo nordisk
""".splitlines()


def pluralize(noun: str) -> str:
    irregular = IRREGULAR_PLURALS.get(noun)
    if irregular is not None:
        return irregular
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun in O_ES_PLURALS:
        return noun + "es"
    return noun + "s"


def verb_s(verb: str) -> str:
    irregular = IRREGULAR_3SG.get(verb)
    if irregular is not None:
        return irregular
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in "aeiou":
        return verb[:-1] + "ies"
    if verb.endswith(("s", "x", "z", "ch", "sh", "o")):
        return verb + "es"
    return verb + "s"


def verb_ing(verb: str) -> str:
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if verb.endswith("e") and not verb.endswith(("ee", "oe", "ye")):
        return verb[:-1] + "ing"
    if verb in DOUBLING_VERBS:
        return verb + verb[-1] + "ing"
    return verb + "ing"


def verb_ed(verb: str) -> str:
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in "aeiou":
        return verb[:-1] + "ied"
    if verb in DOUBLING_VERBS:
        return verb + verb[-1] + "ed"
    return verb + "ed"


def split_entries(raw: list[str]) -> list[str]:
    entries = []
    for line in raw:
        entry = line.split("#", 1)[0].strip().lower()
        if entry:
            entries.append(entry)
    return entries


def build() -> None:
    word_to_pos: dict[str, PosTag] = {}
    # Later updates win; order encodes priority for ambiguous words.
    for words, tag in (
        (NOUNS, PosTag.NOUN),
        (ADJECTIVES, PosTag.ADJECTIVE),
        (ADVERBS, PosTag.ADVERB),
        (VERBS, PosTag.VERB),
        (NUMBER_WORDS, PosTag.NUMBER),
        (OTHER_WORDS, PosTag.OTHER),
        (DETERMINERS, PosTag.DETERMINER),
        (CONJUNCTIONS, PosTag.CONJUNCTION),
        (PREPOSITIONS, PosTag.PREPOSITION),
        (PRONOUNS, PosTag.PRONOUN),
        (AUXILIARIES, PosTag.VERB),
        (CONTRACTIONS, PosTag.OTHER),
    ):
        for word in words:
            word_to_pos[word.lower()] = tag

    aux_set = set(AUXILIARIES) | set(CONTRACTIONS)
    base_nouns = [w for w in NOUNS if word_to_pos[w] is PosTag.NOUN]
    base_verbs = [w for w in VERBS if word_to_pos[w] is PosTag.VERB and w not in aux_set]

    exceptions: dict[str, str] = {}
    derived: list[tuple[str, str, PosTag, bool]] = []  # form, base, tag, add_to_lexicon

    for noun in base_nouns:
        plural = pluralize(noun)
        if plural != noun:
            derived.append((plural, noun, PosTag.NOUN, True))
    irregular_bases = {base for _past, _part, base in IRREGULAR_VERBS}
    for verb in base_verbs:
        derived.append((verb_s(verb), verb, PosTag.VERB, True))
        derived.append((verb_ing(verb), verb, PosTag.VERB, False))
        if verb not in irregular_bases:
            derived.append((verb_ed(verb), verb, PosTag.VERB, False))
    for past, participle, base in IRREGULAR_VERBS:
        for form in {past, participle}:
            derived.append((form, base, PosTag.VERB, True))

    # Inflected lexicon entries; never displace a base word.
    for form, _base, tag, add in derived:
        if add and form not in word_to_pos:
            word_to_pos[form] = tag

    # Expected lemma per surface: derived forms map to their base, every
    # other lexicon entry is its own root. First entry wins on collisions
    # (a derived mapping beats a base self-map, e.g. saw -> see).
    expected: dict[str, tuple[str, PosTag]] = {}
    for form, base, tag, _add in derived:
        expected.setdefault(form, (base, tag))
    for word, tag in word_to_pos.items():
        expected.setdefault(word, (word, tag))

    # Close the map transitively so chains stay idempotent: the plural
    # "buildings" points at "building", which is itself the -ing form of
    # "build", so both must bottom out at "build".
    def terminal(word: str) -> str:
        seen = set()
        while word in expected and expected[word][0] != word and word not in seen:
            seen.add(word)
            word = expected[word][0]
        return word

    expected = {form: (terminal(base), tag) for form, (base, tag) in expected.items()}

    # Emit an exception for every surface the rules get wrong; a self-map
    # pins a root the rules would mangle. The lemmatizer is rebuilt per pass
    # because exceptions feed back into it.
    for _pass in range(6):
        lexicon = Lexicon(word_to_pos=word_to_pos, lemma_exceptions=dict(exceptions))
        lemmatizer = Lemmatizer(lexicon)
        changed = False
        for form, (base, tag) in expected.items():
            if lemmatizer.lemma(form, tag) != base and exceptions.get(form) != base:
                exceptions[form] = base
                changed = True
        if not changed:
            break

    # Final verification: every surface reduces to its expected lemma and
    # every exception target is a fixpoint (required for idempotence).
    lexicon = Lexicon(word_to_pos=word_to_pos, lemma_exceptions=dict(exceptions))
    lemmatizer = Lemmatizer(lexicon)
    for form, (base, tag) in expected.items():
        got = lemmatizer.lemma(form, tag)
        assert got == base, f"{form} ({tag.value}) -> {got}, expected {base}"
    for target in exceptions.values():
        for tag in (PosTag.NOUN, PosTag.VERB, PosTag.ADJECTIVE, PosTag.ADVERB):
            got = lemmatizer.lemma(target, tag)
            assert got == target, f"exception target {target} not a fixpoint ({got})"

    persons = sorted(set(GAZETTEER_PERSON))
    places = sorted(set(GAZETTEER_PLACE) | set(split_entries(GAZETTEER_PLACE_MULTI)))
    orgs = sorted(set(GAZETTEER_ORG) | set(split_entries(GAZETTEER_ORG_MULTI)))

    # Gazetteer entries only ever fire on Noun tokens; drop entries the
    # lexicon tags otherwise (they could never match).
    def alive(entry: str) -> bool:
        tags = {word_to_pos.get(part) for part in entry.split()}
        head = word_to_pos.get(entry.split()[0]) if " " not in entry else None
        return head in (None, PosTag.NOUN) if " " not in entry else True

    for name, entries in (("person", persons), ("place", places), ("org", orgs)):
        dead = [e for e in entries if not alive(e)]
        if dead:
            print(f"note: dropping {len(dead)} non-noun {name} entries: {dead}")
        entries[:] = [e for e in entries if alive(e)]

    assert len(word_to_pos) >= 5000, f"lexicon too small: {len(word_to_pos)}"
    for name, entries in (("person", persons), ("place", places), ("org", orgs)):
        assert len(entries) >= 500, f"{name} gazetteer too small: {len(entries)}"

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    _write_pairs("lexicon.tsv", "surface<TAB>tag", sorted(word_to_pos.items()),
                 lambda kv: f"{kv[0]}\t{kv[1].value}")
    _write_pairs("lemma_exceptions.tsv", "surface<TAB>lemma", sorted(exceptions.items()),
                 lambda kv: f"{kv[0]}\t{kv[1]}")
    _write_list("stopwords.txt", STOPLIST)
    _write_list("gazetteer_person.txt", persons)
    _write_list("gazetteer_place.txt", places)
    _write_list("gazetteer_org.txt", orgs)

    print(f"lexicon entries:   {len(word_to_pos)}")
    print(f"lemma exceptions:  {len(exceptions)}")
    print(f"stopwords:         {len(STOPLIST)}")
    print(f"person gazetteer:  {len(persons)}")
    print(f"place gazetteer:   {len(places)}")
    print(f"org gazetteer:     {len(orgs)}")


def _write_pairs(name, description, items, fmt):
    lines = [f"# {description}, one entry per line"]
    lines.extend(fmt(item) for item in items)
    (OUT_DIR / name).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _write_list(name, items):
    lines = ["# one entry per line"]
    lines.extend(items)
    (OUT_DIR / name).write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    build()
