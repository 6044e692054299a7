#include "complab/lexicon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace complab {

namespace {

// Flat word snapshot used when sampling task inputs. Single words only.
const char* const kObjectWords[] = {
    "apple", "bell", "ford", "farm", "frog", "cow", "cat", "zebra", "bicycle", "add",
    "good", "sports", "pie", "dog", "horse", "sheep", "goat", "pig", "duck", "goose",
    "hen", "rooster", "donkey", "mule", "ox", "buffalo", "bison", "camel", "llama", "alpaca",
    "deer", "elk", "moose", "antelope", "gazelle", "impala", "fox", "wolf", "coyote", "jackal",
    "hyena", "lion", "tiger", "leopard", "jaguar", "cheetah", "cougar", "lynx", "bobcat", "panther",
    "bear", "panda", "koala", "sloth", "otter", "beaver", "badger", "skunk", "weasel", "ferret",
    "mink", "raccoon", "squirrel", "chipmunk", "marmot", "hamster", "gerbil", "mouse", "rat", "rabbit",
    "hare", "hedgehog", "porcupine", "armadillo", "mole", "shrew", "bat", "monkey", "baboon", "macaque",
    "gibbon", "gorilla", "chimpanzee", "orangutan", "lemur", "marmoset", "capuchin", "mandrill", "tamarin", "langur",
    "elephant", "rhinoceros", "hippopotamus", "giraffe", "okapi", "tapir", "warthog", "boar", "whale", "dolphin",
    "porpoise", "orca", "narwhal", "walrus", "seal", "manatee", "dugong", "penguin", "albatross", "pelican",
    "heron", "egret", "stork", "crane", "flamingo", "ibis", "spoonbill", "swan", "eagle", "hawk",
    "falcon", "kestrel", "osprey", "vulture", "condor", "owl", "raven", "crow", "magpie", "jay",
    "cardinal", "robin", "sparrow", "finch", "canary", "wren", "swallow", "swift", "lark", "thrush",
    "starling", "oriole", "warbler", "woodpecker", "kingfisher", "hummingbird", "toucan", "parrot", "macaw", "cockatoo",
    "parakeet", "pigeon", "dove", "quail", "pheasant", "partridge", "peacock", "turkey", "ostrich", "emu",
    "kiwi", "puffin", "gull", "tern", "sandpiper", "plover", "turtle", "tortoise", "terrapin", "lizard",
    "iguana", "gecko", "chameleon", "skink", "monitor", "crocodile", "alligator", "snake", "python", "boa",
    "cobra", "viper", "rattlesnake", "mamba", "salamander", "newt", "toad", "axolotl", "shark", "ray",
    "stingray", "eel", "salmon", "trout", "bass", "perch", "pike", "carp", "catfish", "cod",
    "herring", "sardine", "anchovy", "tuna", "mackerel", "swordfish", "marlin", "flounder", "halibut", "sole",
    "goldfish", "guppy", "minnow", "sturgeon", "barracuda", "grouper", "snapper", "pufferfish", "seahorse", "octopus",
    "squid", "cuttlefish", "nautilus", "jellyfish", "anemone", "coral", "sponge", "starfish", "urchin", "clam",
    "oyster", "mussel", "scallop", "snail", "slug", "crab", "lobster", "crayfish", "shrimp", "prawn",
    "barnacle", "krill", "ant", "bee", "wasp", "hornet", "beetle", "ladybug", "firefly", "weevil",
    "moth", "butterfly", "caterpillar", "dragonfly", "damselfly", "grasshopper", "cricket", "locust", "mantis", "cicada",
    "aphid", "termite", "cockroach", "flea", "gnat", "mosquito", "spider", "tarantula", "scorpion", "tick",
    "centipede", "millipede", "worm", "leech", "banana", "orange", "lemon", "lime", "grapefruit", "peach",
    "pear", "plum", "apricot", "cherry", "grape", "melon", "watermelon", "cantaloupe", "mango", "papaya",
    "pineapple", "kiwifruit", "strawberry", "raspberry", "blueberry", "blackberry", "cranberry", "currant", "gooseberry", "fig",
    "date", "olive", "coconut", "pomegranate", "persimmon", "quince", "nectarine", "tangerine", "guava", "lychee",
    "avocado", "tomato", "potato", "carrot", "beet", "radish", "turnip", "parsnip", "onion", "garlic",
    "leek", "celery", "asparagus", "broccoli", "cauliflower", "cabbage", "lettuce", "spinach", "kale", "chard",
    "pea", "bean", "lentil", "chickpea", "corn", "wheat", "barley", "oat", "rye", "rice",
    "pepper", "chili", "cucumber", "zucchini", "squash", "pumpkin", "eggplant", "okra", "artichoke", "mushroom",
    "walnut", "almond", "pecan", "cashew", "hazelnut", "chestnut", "peanut", "pistachio", "acorn", "bread",
    "bagel", "pretzel", "croissant", "muffin", "biscuit", "cracker", "cake", "cupcake", "brownie", "cookie",
    "doughnut", "waffle", "pancake", "toast", "sandwich", "burger", "hotdog", "pizza", "pasta", "noodle",
    "dumpling", "taco", "burrito", "omelet", "soup", "stew", "salad", "cheese", "butter", "yogurt",
    "cream", "milk", "egg", "bacon", "sausage", "ham", "steak", "meatball", "jelly", "jam",
    "honey", "syrup", "sugar", "salt", "flour", "chocolate", "candy", "caramel", "licorice", "pudding",
    "custard", "sorbet", "sherbet", "popcorn", "chip", "fries", "table", "chair", "stool", "bench",
    "sofa", "couch", "armchair", "recliner", "bed", "cot", "crib", "cradle", "hammock", "bunk",
    "mattress", "pillow", "cushion", "blanket", "quilt", "duvet", "sheet", "curtain", "blind", "shutter",
    "carpet", "rug", "mat", "doormat", "desk", "bookcase", "shelf", "cabinet", "cupboard", "wardrobe",
    "closet", "dresser", "drawer", "chest", "trunk", "safe", "mirror", "frame", "painting", "poster",
    "clock", "lamp", "lantern", "candle", "chandelier", "vase", "pot", "pan", "skillet", "kettle",
    "teapot", "pitcher", "jug", "bottle", "jar", "can", "bowl", "plate", "saucer", "cup",
    "mug", "glass", "goblet", "tumbler", "fork", "spoon", "knife", "ladle", "spatula", "whisk",
    "grater", "peeler", "strainer", "colander", "funnel", "tray", "platter", "napkin", "tablecloth", "coaster",
    "toaster", "blender", "mixer", "oven", "stove", "microwave", "refrigerator", "freezer", "dishwasher", "sink",
    "faucet", "drain", "bucket", "basin", "tub", "shower", "toilet", "towel", "soap", "shampoo",
    "sponge", "brush", "comb", "razor", "toothbrush", "toothpaste", "floss", "lotion", "perfume", "tissue",
    "hammer", "mallet", "screwdriver", "wrench", "pliers", "saw", "drill", "chisel", "file", "plane",
    "level", "ruler", "tape", "clamp", "vise", "anvil", "axe", "hatchet", "shovel", "spade",
    "rake", "hoe", "trowel", "pitchfork", "wheelbarrow", "ladder", "scaffold", "crowbar", "nail", "screw",
    "bolt", "nut", "washer", "rivet", "hinge", "latch", "lock", "key", "chain", "rope",
    "cord", "wire", "cable", "string", "thread", "needle", "pin", "clip", "stapler", "staple",
    "scissors", "shears", "glue", "paste", "pencil", "crayon", "marker", "chalk", "eraser", "sharpener",
    "notebook", "journal", "diary", "ledger", "folder", "binder", "envelope", "stamp", "letter", "postcard",
    "card", "book", "magazine", "newspaper", "dictionary", "atlas", "map", "globe", "calendar", "chart",
    "graph", "compass", "protractor", "abacus", "calculator", "computer", "laptop", "tablet", "keyboard", "monitor",
    "printer", "scanner", "camera", "tripod", "projector", "telescope", "microscope", "binoculars", "magnifier", "lens",
    "telephone", "radio", "television", "antenna", "speaker", "microphone", "headphone", "earphone", "amplifier", "turntable",
    "record", "cassette", "battery", "charger", "flashlight", "torch", "bulb", "switch", "outlet", "plug",
    "fuse", "generator", "motor", "engine", "pump", "valve", "pipe", "hose", "nozzle", "gauge",
    "meter", "thermometer", "barometer", "scale", "balance", "pendulum", "spring", "gear", "pulley", "lever",
    "wheel", "axle", "crank", "piston", "turbine", "propeller", "rudder", "anchor", "mast", "sail",
    "oar", "paddle", "canoe", "kayak", "raft", "boat", "ship", "ferry", "yacht", "tugboat",
    "barge", "submarine", "car", "truck", "van", "bus", "taxi", "ambulance", "jeep", "tractor",
    "trailer", "wagon", "cart", "carriage", "chariot", "sled", "sleigh", "scooter", "moped", "motorcycle",
    "unicycle", "tricycle", "train", "locomotive", "caboose", "tram", "trolley", "subway", "airplane", "jet",
    "glider", "helicopter", "balloon", "blimp", "rocket", "shuttle", "satellite", "drone", "parachute", "kite",
    "shirt", "blouse", "sweater", "cardigan", "jacket", "coat", "parka", "raincoat", "vest", "suit",
    "tuxedo", "dress", "gown", "skirt", "trousers", "pants", "jeans", "shorts", "overalls", "pajamas",
    "robe", "apron", "uniform", "scarf", "shawl", "glove", "mitten", "hat", "cap", "beanie",
    "beret", "helmet", "hood", "crown", "tiara", "veil", "mask", "belt", "buckle", "suspenders",
    "sock", "stocking", "shoe", "boot", "sandal", "slipper", "sneaker", "loafer", "heel", "lace",
    "button", "zipper", "pocket", "collar", "sleeve", "cuff", "ring", "bracelet", "necklace", "pendant",
    "locket", "earring", "brooch", "badge", "medal", "trophy", "ribbon", "watch", "wallet", "purse",
    "handbag", "backpack", "satchel", "briefcase", "suitcase", "luggage", "umbrella", "cane", "crutch", "fan",
    "house", "cottage", "cabin", "hut", "shack", "mansion", "palace", "castle", "fortress", "tower",
    "lighthouse", "windmill", "barn", "stable", "silo", "shed", "garage", "greenhouse", "factory", "mill",
    "warehouse", "store", "shop", "market", "bakery", "butchery", "pharmacy", "library", "museum", "gallery",
    "theater", "cinema", "stadium", "arena", "gym", "school", "college", "university", "hospital", "clinic",
    "church", "chapel", "cathedral", "temple", "mosque", "synagogue", "monastery", "shrine", "courthouse", "prison",
    "station", "airport", "harbor", "port", "dock", "pier", "wharf", "bridge", "tunnel", "dam",
    "canal", "aqueduct", "fountain", "well", "reservoir", "pool", "pond", "lake", "river", "stream",
    "brook", "creek", "waterfall", "ocean", "sea", "bay", "gulf", "lagoon", "marsh", "swamp",
    "meadow", "field", "prairie", "pasture", "orchard", "vineyard", "garden", "park", "forest", "wood",
    "grove", "jungle", "desert", "dune", "oasis", "canyon", "valley", "gorge", "cliff", "ridge",
    "hill", "mountain", "volcano", "glacier", "iceberg", "cave", "cavern", "island", "peninsula", "reef",
    "beach", "shore", "coast", "rock", "boulder", "stone", "pebble", "gravel", "sand", "clay",
    "mud", "soil", "dust", "crystal", "diamond", "ruby", "emerald", "sapphire", "pearl", "opal",
    "topaz", "amber", "quartz", "marble", "granite", "slate", "copper", "bronze", "brass", "iron",
    "steel", "silver", "gold", "platinum", "aluminum", "tin", "lead", "zinc", "nickel", "mercury",
    "tree", "sapling", "trunk", "branch", "twig", "leaf", "root", "bark", "stump", "log",
    "timber", "lumber", "plank", "board", "beam", "post", "pole", "stake", "fence", "gate",
    "hedge", "bush", "shrub", "vine", "ivy", "fern", "moss", "lichen", "reed", "bamboo",
    "cactus", "palm", "oak", "maple", "pine", "cedar", "birch", "willow", "poplar", "aspen",
    "elm", "ash", "beech", "sycamore", "magnolia", "dogwood", "juniper", "spruce", "redwood", "sequoia",
    "flower", "blossom", "petal", "stem", "bud", "seed", "bulb", "rose", "tulip", "daisy",
    "lily", "orchid", "violet", "daffodil", "sunflower", "marigold", "poppy", "peony", "iris", "lavender",
    "jasmine", "carnation", "dandelion", "clover", "grass", "hay", "straw", "wreath", "bouquet", "drum",
    "cymbal", "tambourine", "triangle", "xylophone", "marimba", "piano", "organ", "accordion", "harmonica", "flute",
    "piccolo", "clarinet", "oboe", "bassoon", "saxophone", "trumpet", "cornet", "trombone", "tuba", "horn",
    "bugle", "violin", "viola", "cello", "harp", "banjo", "mandolin", "ukulele", "guitar", "lyre",
    "whistle", "bellows", "metronome", "baton", "ball", "balloon", "marble", "dice", "domino", "puzzle",
    "doll", "puppet", "teddy", "robot", "yoyo", "top", "hoop", "swing", "slide", "seesaw",
    "sandbox", "skateboard", "surfboard", "snowboard", "ski", "skate", "sledge", "racket", "paddle", "bat",
    "glove", "helmet", "goal", "net", "hurdle", "javelin", "discus", "hammer", "dumbbell", "barbell",
    "treadmill", "rowing", "dartboard", "dart", "bowling", "billiards", "cue", "chess", "checkers", "backgammon",
};

struct VerbPair { const char* verb; const char* past; };

// Simple-past table. Irregular forms listed explicitly, regular forms spelled
// out so doubling/y-rules never need code.
const VerbPair kPastTense[] = {
    {"pay", "paid"}, {"go", "went"}, {"eat", "ate"}, {"come", "came"}, {"see", "saw"},
    {"take", "took"}, {"make", "made"}, {"know", "knew"}, {"get", "got"}, {"give", "gave"},
    {"find", "found"}, {"think", "thought"}, {"tell", "told"}, {"become", "became"}, {"show", "showed"},
    {"leave", "left"}, {"feel", "felt"}, {"put", "put"}, {"bring", "brought"}, {"begin", "began"},
    {"keep", "kept"}, {"hold", "held"}, {"write", "wrote"}, {"stand", "stood"}, {"hear", "heard"},
    {"let", "let"}, {"mean", "meant"}, {"set", "set"}, {"meet", "met"}, {"run", "ran"},
    {"sit", "sat"}, {"speak", "spoke"}, {"lead", "led"}, {"read", "read"}, {"grow", "grew"},
    {"lose", "lost"}, {"fall", "fell"}, {"send", "sent"}, {"build", "built"}, {"understand", "understood"},
    {"draw", "drew"}, {"break", "broke"}, {"spend", "spent"}, {"cut", "cut"}, {"rise", "rose"},
    {"drive", "drove"}, {"buy", "bought"}, {"wear", "wore"}, {"choose", "chose"}, {"catch", "caught"},
    {"fight", "fought"}, {"throw", "threw"}, {"fly", "flew"}, {"sell", "sold"}, {"ride", "rode"},
    {"sing", "sang"}, {"swim", "swam"}, {"blow", "blew"}, {"drink", "drank"}, {"forget", "forgot"},
    {"forgive", "forgave"}, {"freeze", "froze"}, {"hide", "hid"}, {"ring", "rang"}, {"shake", "shook"},
    {"shine", "shone"}, {"shoot", "shot"}, {"sleep", "slept"}, {"slide", "slid"}, {"steal", "stole"},
    {"stick", "stuck"}, {"sting", "stung"}, {"strike", "struck"}, {"swear", "swore"}, {"sweep", "swept"},
    {"swing", "swung"}, {"teach", "taught"}, {"tear", "tore"}, {"wake", "woke"}, {"win", "won"},
    {"bend", "bent"}, {"bite", "bit"}, {"bleed", "bled"}, {"breed", "bred"}, {"burst", "burst"},
    {"cling", "clung"}, {"creep", "crept"}, {"deal", "dealt"}, {"dig", "dug"}, {"feed", "fed"},
    {"flee", "fled"}, {"fling", "flung"}, {"grind", "ground"}, {"hang", "hung"}, {"kneel", "knelt"},
    {"lay", "laid"}, {"lend", "lent"}, {"light", "lit"}, {"seek", "sought"}, {"shrink", "shrank"},
    {"spin", "spun"}, {"spit", "spat"}, {"spread", "spread"}, {"spring", "sprang"}, {"weep", "wept"},
    {"weave", "wove"}, {"wind", "wound"}, {"bear", "bore"}, {"beat", "beat"}, {"arise", "arose"},
    {"awake", "awoke"}, {"say", "said"}, {"do", "did"}, {"have", "had"}, {"hit", "hit"},
    {"hurt", "hurt"}, {"quit", "quit"}, {"shut", "shut"}, {"cost", "cost"}, {"cast", "cast"},
    {"stop", "stopped"}, {"plan", "planned"}, {"drop", "dropped"}, {"grab", "grabbed"}, {"hug", "hugged"},
    {"beg", "begged"}, {"chat", "chatted"}, {"clap", "clapped"}, {"skip", "skipped"}, {"trip", "tripped"},
    {"nod", "nodded"}, {"pat", "patted"}, {"rub", "rubbed"}, {"jog", "jogged"}, {"shop", "shopped"},
    {"slip", "slipped"}, {"snap", "snapped"}, {"wrap", "wrapped"}, {"scrub", "scrubbed"}, {"try", "tried"},
    {"cry", "cried"}, {"carry", "carried"}, {"marry", "married"}, {"study", "studied"}, {"hurry", "hurried"},
    {"worry", "worried"}, {"copy", "copied"}, {"bury", "buried"}, {"empty", "emptied"}, {"apply", "applied"},
    {"deny", "denied"}, {"reply", "replied"}, {"rely", "relied"}, {"fry", "fried"}, {"dry", "dried"},
    {"spy", "spied"}, {"envy", "envied"}, {"vary", "varied"}, {"pity", "pitied"}, {"walk", "walked"},
    {"talk", "talked"}, {"jump", "jumped"}, {"play", "played"}, {"call", "called"}, {"ask", "asked"},
    {"work", "worked"}, {"look", "looked"}, {"want", "wanted"}, {"use", "used"}, {"need", "needed"},
    {"help", "helped"}, {"move", "moved"}, {"live", "lived"}, {"believe", "believed"}, {"happen", "happened"},
    {"include", "included"}, {"continue", "continued"}, {"change", "changed"}, {"watch", "watched"}, {"follow", "followed"},
    {"create", "created"}, {"open", "opened"}, {"close", "closed"}, {"start", "started"}, {"turn", "turned"},
    {"wait", "waited"}, {"listen", "listened"}, {"love", "loved"}, {"like", "liked"}, {"visit", "visited"},
    {"plant", "planted"}, {"paint", "painted"}, {"clean", "cleaned"}, {"cook", "cooked"}, {"dance", "danced"},
    {"laugh", "laughed"}, {"learn", "learned"}, {"wash", "washed"}, {"climb", "climbed"}, {"count", "counted"},
    {"dress", "dressed"}, {"enter", "entered"}, {"fill", "filled"}, {"finish", "finished"}, {"fix", "fixed"},
    {"gather", "gathered"}, {"greet", "greeted"}, {"guess", "guessed"}, {"hunt", "hunted"}, {"invite", "invited"},
    {"join", "joined"}, {"kick", "kicked"}, {"kiss", "kissed"}, {"knock", "knocked"}, {"land", "landed"},
    {"lift", "lifted"}, {"lock", "locked"}, {"march", "marched"}, {"mend", "mended"}, {"mix", "mixed"},
    {"notice", "noticed"}, {"obey", "obeyed"}, {"pack", "packed"}, {"pick", "picked"}, {"point", "pointed"},
    {"pour", "poured"}, {"pull", "pulled"}, {"push", "pushed"}, {"race", "raced"}, {"reach", "reached"},
    {"remember", "remembered"}, {"repair", "repaired"}, {"rescue", "rescued"}, {"rest", "rested"}, {"return", "returned"},
    {"roar", "roared"}, {"rock", "rocked"}, {"roll", "rolled"}, {"sail", "sailed"}, {"save", "saved"},
    {"scream", "screamed"}, {"search", "searched"}, {"shout", "shouted"}, {"sign", "signed"}, {"smile", "smiled"},
    {"sneeze", "sneezed"}, {"sniff", "sniffed"}, {"sort", "sorted"}, {"stay", "stayed"}, {"stir", "stirred"},
    {"stretch", "stretched"}, {"surprise", "surprised"}, {"taste", "tasted"}, {"thank", "thanked"}, {"tickle", "tickled"},
    {"touch", "touched"}, {"trust", "trusted"}, {"type", "typed"}, {"unlock", "unlocked"}, {"wander", "wandered"},
    {"warn", "warned"}, {"wave", "waved"}, {"whisper", "whispered"}, {"wish", "wished"}, {"wonder", "wondered"},
    {"yawn", "yawned"}, {"yell", "yelled"}, {"answer", "answered"}, {"appear", "appeared"}, {"arrive", "arrived"},
    {"attack", "attacked"}, {"bake", "baked"}, {"bark", "barked"}, {"behave", "behaved"}, {"belong", "belonged"},
    {"blink", "blinked"}, {"boast", "boasted"}, {"boil", "boiled"}, {"borrow", "borrowed"}, {"bounce", "bounced"},
    {"bow", "bowed"}, {"brush", "brushed"}, {"bump", "bumped"}, {"camp", "camped"}, {"care", "cared"},
    {"carve", "carved"}, {"celebrate", "celebrated"}, {"charge", "charged"}, {"chase", "chased"}, {"cheer", "cheered"},
    {"chew", "chewed"}, {"chop", "chopped"}, {"circle", "circled"}, {"claim", "claimed"}, {"collect", "collected"},
    {"comb", "combed"}, {"compare", "compared"}, {"complain", "complained"}, {"cough", "coughed"}, {"cover", "covered"},
    {"crawl", "crawled"}, {"crash", "crashed"}, {"cross", "crossed"}, {"crush", "crushed"}, {"cycle", "cycled"},
    {"damage", "damaged"}, {"dare", "dared"}, {"decorate", "decorated"}, {"deliver", "delivered"}, {"describe", "described"},
    {"design", "designed"}, {"destroy", "destroyed"}, {"dine", "dined"}, {"dive", "dived"}, {"divide", "divided"},
    {"dust", "dusted"}, {"earn", "earned"}, {"echo", "echoed"}, {"embrace", "embraced"}, {"employ", "employed"},
    {"encourage", "encouraged"}, {"enjoy", "enjoyed"}, {"escape", "escaped"}, {"examine", "examined"}, {"exercise", "exercised"},
    {"expand", "expanded"}, {"explain", "explained"}, {"explore", "explored"}, {"fade", "faded"}, {"fasten", "fastened"},
    {"fetch", "fetched"}, {"film", "filmed"}, {"flash", "flashed"}, {"float", "floated"}, {"flood", "flooded"},
    {"flow", "flowed"}, {"fold", "folded"}, {"form", "formed"}, {"frown", "frowned"}, {"gallop", "galloped"},
    {"gaze", "gazed"}, {"giggle", "giggled"}, {"glow", "glowed"}, {"glue", "glued"}, {"grin", "grinned"},
    {"guard", "guarded"}, {"guide", "guided"}, {"hammer", "hammered"}, {"hand", "handed"}, {"harvest", "harvested"},
    {"heal", "healed"}, {"heat", "heated"}, {"hike", "hiked"}, {"hop", "hopped"}, {"hope", "hoped"},
    {"howl", "howled"}, {"imagine", "imagined"}, {"improve", "improved"}, {"inform", "informed"}, {"inspect", "inspected"},
    {"install", "installed"}, {"introduce", "introduced"}, {"invent", "invented"}, {"iron", "ironed"}, {"itch", "itched"},
    {"juggle", "juggled"}, {"label", "labeled"}, {"lean", "leaned"}, {"lick", "licked"}, {"list", "listed"},
    {"load", "loaded"}, {"manage", "managed"}, {"mark", "marked"}, {"measure", "measured"}, {"melt", "melted"},
    {"mention", "mentioned"}, {"milk", "milked"}, {"mount", "mounted"}, {"nail", "nailed"}, {"name", "named"},
    {"observe", "observed"}, {"offer", "offered"}, {"order", "ordered"}, {"owe", "owed"}, {"own", "owned"},
    {"paddle", "paddled"}, {"park", "parked"}, {"pass", "passed"}, {"paste", "pasted"}, {"pause", "paused"},
    {"peck", "pecked"}, {"peel", "peeled"}, {"perform", "performed"}, {"phone", "phoned"}, {"pinch", "pinched"},
    {"place", "placed"}, {"polish", "polished"}, {"practice", "practiced"}, {"praise", "praised"}, {"pray", "prayed"},
    {"preach", "preached"}, {"present", "presented"}, {"press", "pressed"}, {"pretend", "pretended"}, {"print", "printed"},
    {"produce", "produced"}, {"promise", "promised"}, {"protect", "protected"}, {"provide", "provided"}, {"pump", "pumped"},
    {"punish", "punished"}, {"question", "questioned"}, {"quote", "quoted"}, {"rattle", "rattled"}, {"record", "recorded"},
    {"recycle", "recycled"}, {"refuse", "refused"}, {"remain", "remained"}, {"remove", "removed"}, {"rent", "rented"},
    {"repeat", "repeated"}, {"replace", "replaced"}, {"report", "reported"}, {"request", "requested"}, {"retire", "retired"},
    {"rinse", "rinsed"}, {"risk", "risked"}, {"row", "rowed"}, {"ruin", "ruined"}, {"rush", "rushed"},
    {"salute", "saluted"}, {"scatter", "scattered"}, {"scold", "scolded"}, {"scoop", "scooped"}, {"scratch", "scratched"},
    {"settle", "settled"}, {"share", "shared"}, {"shave", "shaved"}, {"shelter", "sheltered"}, {"ship", "shipped"},
    {"shiver", "shivered"}, {"sigh", "sighed"}, {"signal", "signaled"}, {"sip", "sipped"}, {"slam", "slammed"},
    {"smash", "smashed"}, {"soak", "soaked"}, {"soothe", "soothed"}, {"sparkle", "sparkled"}, {"spray", "sprayed"},
    {"sprint", "sprinted"}, {"squeak", "squeaked"}, {"squeeze", "squeezed"}, {"stamp", "stamped"}, {"stare", "stared"},
    {"startle", "startled"}, {"steer", "steered"}, {"stitch", "stitched"}, {"store", "stored"}, {"stuff", "stuffed"},
    {"subtract", "subtracted"}, {"suffer", "suffered"}, {"suggest", "suggested"}, {"supply", "supplied"}, {"support", "supported"},
    {"suppose", "supposed"}, {"surround", "surrounded"}, {"swallow", "swallowed"}, {"tame", "tamed"}, {"tap", "tapped"},
    {"tease", "teased"}, {"tempt", "tempted"}, {"test", "tested"}, {"tie", "tied"}, {"tilt", "tilted"},
    {"toast", "toasted"}, {"toss", "tossed"}, {"trace", "traced"}, {"trade", "traded"}, {"train", "trained"},
    {"tremble", "trembled"}, {"trick", "tricked"}, {"tug", "tugged"}, {"tumble", "tumbled"}, {"twist", "twisted"},
    {"unite", "united"}, {"vanish", "vanished"}, {"vote", "voted"}, {"wail", "wailed"}, {"weigh", "weighed"},
    {"welcome", "welcomed"}, {"whistle", "whistled"}, {"wink", "winked"}, {"wipe", "wiped"}, {"wreck", "wrecked"},
    {"zip", "zipped"}, {"zoom", "zoomed"},
};

struct AntonymPair { const char* a; const char* b; };

// Capitalized antonym pairs; lookups work in both directions.
const AntonymPair kAntonyms[] = {
    {"Above", "Below"}, {"Hot", "Cold"}, {"Big", "Small"}, {"Fast", "Slow"}, {"Up", "Down"},
    {"Left", "Right"}, {"Open", "Closed"}, {"Happy", "Sad"}, {"Light", "Dark"}, {"Hard", "Soft"},
    {"Early", "Late"}, {"Full", "Empty"}, {"Strong", "Weak"}, {"Young", "Old"}, {"Rich", "Poor"},
    {"Clean", "Dirty"}, {"Loud", "Quiet"}, {"Long", "Short"}, {"Wide", "Narrow"}, {"High", "Low"},
    {"Near", "Far"}, {"Wet", "Dry"}, {"Thick", "Thin"}, {"Sharp", "Dull"}, {"Smooth", "Rough"},
    {"Sweet", "Sour"}, {"Begin", "End"}, {"Day", "Night"}, {"True", "False"}, {"Win", "Lose"},
    {"Buy", "Sell"}, {"Give", "Take"}, {"Push", "Pull"}, {"Inside", "Outside"}, {"Always", "Never"},
    {"Before", "After"}, {"First", "Last"}, {"More", "Less"}, {"Add", "Subtract"}, {"North", "South"},
    {"East", "West"}, {"Front", "Back"}, {"Top", "Bottom"}, {"Enter", "Exit"}, {"Arrive", "Depart"},
    {"Accept", "Reject"}, {"Agree", "Disagree"}, {"Appear", "Vanish"}, {"Asleep", "Awake"}, {"Attack", "Defend"},
    {"Bent", "Straight"}, {"Best", "Worst"}, {"Better", "Worse"}, {"Bright", "Dim"}, {"Busy", "Idle"},
    {"Calm", "Stormy"}, {"Cheap", "Expensive"}, {"Deep", "Shallow"}, {"Easy", "Difficult"}, {"Everything", "Nothing"},
    {"Expand", "Contract"}, {"Float", "Sink"}, {"Foolish", "Wise"}, {"Forward", "Backward"}, {"Found", "Lost"},
    {"Fresh", "Stale"}, {"Friend", "Enemy"}, {"Gentle", "Harsh"}, {"Giant", "Tiny"}, {"Guilty", "Innocent"},
    {"Healthy", "Sick"}, {"Hero", "Villain"}, {"Increase", "Decrease"}, {"Interior", "Exterior"}, {"Junior", "Senior"},
    {"Laugh", "Cry"}, {"Lend", "Borrow"}, {"Major", "Minor"}, {"Maximum", "Minimum"}, {"Melt", "Freeze"},
    {"Modern", "Ancient"}, {"Noisy", "Silent"}, {"Odd", "Even"}, {"Over", "Under"}, {"Past", "Future"},
    {"Peace", "War"}, {"Plentiful", "Scarce"}, {"Polite", "Rude"}, {"Presence", "Absence"}, {"Private", "Public"},
    {"Problem", "Solution"}, {"Question", "Answer"}, {"Raise", "Lower"}, {"Remember", "Forget"}, {"Rise", "Fall"},
    {"Safe", "Dangerous"}, {"Same", "Different"}, {"Seldom", "Often"}, {"Send", "Receive"}, {"Simple", "Complex"},
    {"Singular", "Plural"}, {"Smile", "Frown"}, {"Sorrow", "Joy"}, {"Start", "Finish"}, {"Stiff", "Flexible"},
    {"Success", "Failure"}, {"Summer", "Winter"}, {"Sunrise", "Sunset"}, {"Tame", "Wild"}, {"Tight", "Loose"},
    {"Together", "Apart"}, {"Transparent", "Opaque"}, {"Useful", "Useless"}, {"Vacant", "Occupied"}, {"Victory", "Defeat"},
    {"Visible", "Invisible"}, {"Warm", "Cool"}, {"Whole", "Partial"}, {"Winner", "Loser"}, {"Wisdom", "Folly"},
    {"Yes", "No"}, {"Alive", "Dead"}, {"Ascend", "Descend"}, {"Bold", "Shy"}, {"Captive", "Free"},
    {"Cloudy", "Clear"}, {"Combine", "Separate"}, {"Comedy", "Tragedy"}, {"Common", "Rare"}, {"Compliment", "Insult"},
    {"Conceal", "Reveal"}, {"Cruel", "Kind"}, {"Dawn", "Dusk"}, {"Drunk", "Sober"}, {"Fact", "Fiction"},
    {"Fail", "Succeed"}, {"Famous", "Unknown"}, {"Fancy", "Plain"},
};

const char* const kUnits[] = {"",     "one",  "two", "three", "four",
                              "five", "six",  "seven", "eight", "nine"};
const char* const kTeens[] = {"ten",     "eleven",  "twelve",    "thirteen", "fourteen",
                              "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
const char* const kTens[] = {"",      "",      "twenty", "thirty", "forty",
                             "fifty", "sixty", "seventy", "eighty", "ninety"};

std::string below_hundred(int n) {
    if (n < 10) return kUnits[n];
    if (n < 20) return kTeens[n - 10];
    std::string out = kTens[n / 10];
    if (n % 10) out += std::string("-") + kUnits[n % 10];
    return out;
}

}  // namespace

const std::vector<std::string>& object_words() {
    static const std::vector<std::string> words = [] {
        std::vector<std::string> out;
        std::unordered_set<std::string> seen;
        for (const char* w : kObjectWords)
            if (seen.insert(w).second) out.emplace_back(w);
        return out;
    }();
    return words;
}

const std::unordered_map<std::string, std::string>& past_tense_map() {
    static const std::unordered_map<std::string, std::string> map = [] {
        std::unordered_map<std::string, std::string> m;
        for (const auto& p : kPastTense) m.emplace(p.verb, p.past);
        return m;
    }();
    return map;
}

const std::vector<std::string>& past_tense_verbs() {
    static const std::vector<std::string> verbs = [] {
        std::vector<std::string> out;
        std::unordered_set<std::string> seen;
        for (const auto& p : kPastTense)
            if (seen.insert(p.verb).second) out.emplace_back(p.verb);
        return out;
    }();
    return verbs;
}

const std::unordered_map<std::string, std::string>& antonym_map() {
    static const std::unordered_map<std::string, std::string> map = [] {
        std::unordered_map<std::string, std::string> m;
        for (const auto& p : kAntonyms) {
            m.emplace(p.a, p.b);
            m.emplace(p.b, p.a);
        }
        return m;
    }();
    return map;
}

const std::vector<std::string>& antonym_words() {
    static const std::vector<std::string> words = [] {
        std::vector<std::string> out;
        std::unordered_set<std::string> seen;
        for (const auto& p : kAntonyms) {
            if (seen.insert(p.a).second) out.emplace_back(p.a);
            if (seen.insert(p.b).second) out.emplace_back(p.b);
        }
        return out;
    }();
    return words;
}

std::string number_to_words(int n) {
    if (n < 1 || n > 1000) throw std::invalid_argument("number_to_words: range is 1..1000");
    if (n == 1000) return "one thousand";
    std::string out;
    if (n >= 100) {
        out = std::string(kUnits[n / 100]) + " hundred";
        n %= 100;
        if (n == 0) return out;
        out += " ";
    }
    return out + below_hundred(n);
}

int words_to_number(const std::string& words) {
    // Tokens are space-separated; tens-units compounds carry a hyphen.
    std::istringstream in(words);
    std::string tok;
    int total = 0, current = 0;
    bool any = false;
    auto small_value = [](const std::string& w) -> int {
        for (int i = 1; i < 10; ++i)
            if (w == kUnits[i]) return i;
        for (int i = 0; i < 10; ++i)
            if (w == kTeens[i]) return 10 + i;
        for (int i = 2; i < 10; ++i)
            if (w == kTens[i]) return 10 * i;
        return -1;
    };
    while (in >> tok) {
        any = true;
        if (tok == "thousand") {
            if (current == 0) throw std::invalid_argument("words_to_number: bad thousand");
            total += current * 1000;
            current = 0;
        } else if (tok == "hundred") {
            if (current == 0) throw std::invalid_argument("words_to_number: bad hundred");
            current *= 100;
        } else {
            const auto dash = tok.find('-');
            if (dash != std::string::npos) {
                const int tens = small_value(tok.substr(0, dash));
                const int unit = small_value(tok.substr(dash + 1));
                if (tens < 20 || tens % 10 != 0 || unit < 1 || unit > 9)
                    throw std::invalid_argument("words_to_number: bad compound '" + tok + "'");
                current += tens + unit;
            } else {
                const int v = small_value(tok);
                if (v < 0) throw std::invalid_argument("words_to_number: unknown word '" + tok + "'");
                current += v;
            }
        }
    }
    if (!any) throw std::invalid_argument("words_to_number: empty text");
    return total + current;
}

}  // namespace complab
