#!/usr/bin/env python3
"""Regenerate src/concord/data/common_words_10k.txt.

The bundled dictionary guards anonymization: a username equal to one of
these words is flagged instead of blindly replaced. The list is authored
here as frequency-banded lemma lists plus regular inflections (verb
s/ed/ing, noun plurals), then truncated to exactly 10000 entries. Band
order approximates frequency rank; personal names are deliberately
excluded so they never suppress a legitimate replacement.

Run from the repo root:  python tools/build_wordlist.py
"""

from __future__ import annotations

import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "concord" / "data" / "common_words_10k.txt"

FUNCTION = """
a about above across after again against all almost alone along already also although always am among an and
another any anybody anyone anything anywhere are around as at away back be because been before behind being
below beneath beside besides between beyond both but by can cannot could did do does doing done down during
each either else enough even ever every everybody everyone everything everywhere few for from front full
further get got had has have having he her here hers herself him himself his how however i if in indeed
inside instead into is it its itself just last least less let like little many may me might mine more most
much must my myself near neither never next no nobody none nor not nothing now nowhere of off often on once
one only onto or other others our ours ourselves out outside over own per perhaps quite rather really same
she should since so some somebody someone something sometimes somewhere still such than that the their theirs
them themselves then there these they this those through throughout till to together too toward towards under
until unto up upon us very was we well were what whatever when whenever where wherever whether which while who
whoever whole whom whose why will with within without would yes yet you your yours yourself
""".split()

CONVERSATIONAL = """
ah aha alright aw awesome bye cool dear eh em er gosh ha haha hah hey hi hmm huh kinda lol nah nope oh ok okay
oops ouch ow please sorta sth thank thanks ugh uh uhh um umm wanna whoa wow yay yea yeah yep yikes yo yup
""".split()

VERBS = """
accept access accompany accomplish achieve acknowledge acquire act adapt add address adjust admire admit adopt
advance advise afford agree aim allow analyze announce annoy answer anticipate apologize appeal appear apply
appoint appreciate approach approve argue arise arrange arrest arrive ask assess assign assist assume assure
attach attack attempt attend attract avoid bake balance ban base bear beat become beg begin behave believe
belong bend benefit bet bind bite blame blend bless block blow board boil book boost borrow bother bounce bow
brake breathe breed bring broadcast brush build burn burst bury buy calculate call calm camp cancel capture
care carry cast catch cause celebrate challenge change charge chase chat check cheer chew choose chop claim
clap classify clean clear climb close collapse collect combine come comment commit communicate compare compete
complain complete compose concentrate concern conclude conduct confirm confuse connect consider consist contain
continue contribute control convert convince cook copy correct cost count cover crack crash create cross cry
cut damage dance dare deal decide declare decline decorate decrease defeat defend define delay deliver demand
demonstrate deny depend describe deserve design desire destroy detect determine develop devote differ dig
direct disagree disappear disappoint discover discuss dislike dismiss display distribute disturb dive divide
doubt drag draw dream dress drink drive drop drown dry earn eat edit educate elect embarrass emerge emphasize
employ enable encounter encourage end endure engage enjoy ensure enter entertain escape establish estimate
evaluate examine exchange excite exclude excuse exercise exist expand expect experience explain explore export
express extend face fail fall fasten fear feed feel fight fill find finish fit fix flee float flow fly fold
follow forbid force forget forgive form found freeze frighten fry fulfill gain gather generate give glance go
govern grab grant greet grow guarantee guard guess guide handle hang happen harm hate head heal hear heat help
hesitate hide hire hit hold hope hug hunt hurry hurt identify ignore illustrate imagine imply import impress
improve include increase indicate influence inform injure insist install intend interact interest interrupt
introduce invent invest investigate invite involve iron join joke judge jump justify keep kick kill kiss knit
knock know label lack land laugh launch lay lead lean leap learn leave lend lie lift light limit link list
listen live load locate lock look lose love maintain make manage mark marry match matter mean measure meet
melt mention mind miss mix modify monitor motivate move multiply name need neglect negotiate notice obey
object observe obtain occur offend offer open operate oppose order organize overcome owe owns pack paint park
participate pass pause pay perform permit persuade pick place plan plant play plead point pollute possess
postpone pour practice praise pray predict prefer prepare present preserve press pretend prevent print proceed
produce promise promote pronounce propose protect protest prove provide publish pull punish purchase push put
qualify question quit raise reach react read realize receive recognize recommend record recover reduce refer
reflect refuse regard register regret reject relate relax release rely remain remember remind remove rent
repair repeat replace reply report represent request require rescue research resist resolve respect respond
rest restore result retain retire return reveal review revise reward ride ring rise risk rub ruin rule run
rush satisfy save say scare scream seal search seat see seek seem select sell send separate serve set settle
shake share shift shine shoot shop shout show shut sign signal sing sink sit sleep slide slip smell smile
smoke sneeze solve sort sound speak specify spell spend spill spin split spoil spread stand stare start state
stay steal stick stop store stretch strike struggle study submit succeed suffer suggest suit supply support
suppose surprise surround survive swear sweep swim swing switch take talk teach tear tell tend test thank
think threaten throw tie touch train transfer transform translate travel treat tremble trust try turn type
understand undertake unite update upset urge use vary view visit vote wait wake walk want warn wash waste
watch wave wear weigh welcome whisper win wish wonder work worry wrap write
""".split()

NOUNS = """
ability absence accent accident account achievement acid action activity actor actress addition administration
adult advantage adventure advertisement advice affair afternoon age agency agenda agent agreement air aircraft
airline airport alarm album alcohol ambition amount analysis analyst angle animal ankle anniversary announcement
apartment appearance apple application appointment april area argument arm army arrival art article artist
aspect assignment assistance assistant association assumption atmosphere attention attitude audience august
aunt author authority autumn average award awareness baby background bag ball banana band bank bar baseball
basis basket basketball bath bathroom battery battle beach bean beard beauty bed bedroom beer beginning being
bell belt bench bicycle bike bill bird birth birthday bit blanket blood boat body bone bonus border boss bottle
bottom bowl box boy boyfriend brain branch bread breakfast breast breath brick bridge brother budget building
bus bush business butter button cabinet cable cake calendar camera campaign cancer candidate candle candy cap
capital captain car card career carpet carrot case cash cat category ceiling cell cent center century ceremony
chain chair chairman champion chance channel chapter character charity chart cheek cheese chemistry chest
chicken child childhood chip chocolate choice church cigarette circle city class classroom client climate clock
cloth clothes cloud club coach coast coat code coffee cold collar colleague collection college color column
combination comfort command commission committee community company comparison competition complaint computer
concept concert conclusion condition conference confidence conflict confusion connection consequence
construction contact content contest context contract contrast contribution conversation cookie corn corner
cotton couch country county couple courage course court cousin cow craft cream credit crew crime criticism
crowd culture cup currency customer cycle dad danger data date daughter dawn day dealer death debate debt
decade december decision definition degree delivery demand density dentist department departure deposit
depth description desert desk detail development device devil diamond diet difference difficulty dinner
direction director dirt disaster discipline discount discussion disease dish distance distribution district
doctor document dog door dot dozen draft drama drawer drawing driver drug drum dust duty ear earth east
economics economy edge editor education effect efficiency effort egg election electricity elevator emergency
emotion emphasis employee employer employment enemy energy engine engineer entertainment enthusiasm entrance
entry environment episode equipment error essay establishment estate evening event evidence exam examination
example excitement exit expert explanation expression extent eye fact factor factory failure faith family fan
farm farmer fashion fat father fault favor feature february fee feedback feeling female fence festival fiction
field figure file film finding finger fire fish fishing flight floor flour flower focus food foot football
forest fork fortune foundation frame freedom friend friendship fruit fuel fun function fund funeral future
game gap garage garbage garden gas gate gear gene general gift girl girlfriend glass goal gold golf government
grade grain grandfather grandmother grass growth guest guidance guitar gun guy habit hair half hall hand hat
health heart height hell hello hero highway hill hip history hole holiday home homework honey hook horror
horse hospital host hotel hour house household housing human humor hunger husband ice idea identity image
imagination impact importance impression improvement incident income independence index indication industry
inflation information ingredient initiative injury insect inspection inspector instance instruction insurance
intention introduction investment invitation island issue item jacket january job joint journey judgment
juice july june kid kind king kitchen knee knife knowledge lab ladder lady lake language laptop law lawyer
layer leader leadership league lecture leg length lesson letter level library life line lip literature living
loan location log loss luck lunch machine magazine mail maintenance major male mall man management manager
manner manufacturer map march margin market marketing marriage master material math maximum meal meaning
measurement meat media medicine medium meeting member membership memory menu mess message metal method middle
midnight milk minimum minister minor minute mirror mission mistake mixture mobile mode model mom moment monday
money month mood moon morning mortgage mother motor mountain mouse mouth movie mud muscle museum music nail
nation nature neck negotiation nerve net network news newspaper night noise north nose note notice novel
november number nurse nut oak obligation occasion october office officer official oil opening operation
opinion opportunity option orange organization origin outcome oven owner package page pain painting pair pan
paper parent parking part partner party passage passenger passion past path patience pattern payment peace
peak pen penalty pencil people pepper percentage perception performance period permission person personality
perspective phase philosophy phone photo phrase physics piano picture pie piece pin pipe pitch pizza place
plane planet plastic plate platform player pleasure plenty poem poet poetry police policy politics pollution
pool population position possession possibility post pot potato pound power prayer preference preparation
presence president pressure price pride priest principle priority prison problem procedure process product
profession professor profile profit program progress project promotion proof property proposal protection
psychology public purpose quality quantity quarter queen quote race radio rain range rate ratio reaction
reader reading reality reason recipe recognition recommendation recording recovery reference reflection
refrigerator region relation relationship relative relief religion remark replacement republic reputation
requirement resident resolution resort resource response responsibility restaurant revenue revolution rhythm
rice river road rock role roof room rope rose routine row sake salad salary sale salt sample sand sandwich
satisfaction saturday sauce scale scene schedule scheme school science scientist score screen script sea
season second secret secretary section sector security selection self sense sentence september series session
setting shape shelter shirt shoe shoulder side significance silver singer sister site situation size skill
skin skirt sky slice snow society sock software soil soldier solution son song soul soup source south space
speaker speech speed spirit spite sport spot spray spring square staff stage standard star statement station
status steak step stock stomach storage storm story stranger strategy street strength stress string structure
student studio stuff style subject substance success sugar suggestion summer sun sunday supermarket surgery
survey sweet system table tale tank tap target task taste tax tea teacher team technology telephone television
temperature tennis tension term text thanks theme theory thing thought throat thursday ticket time tip title
today toe tomato tomorrow tone tongue tool tooth top topic total tour tourist towel tower town toy track trade
tradition traffic trainer training transition transportation trash treatment tree trick trip trouble truck
truth tuesday tune twist uncle understanding union unit university user vacation value variation variety
vegetable vehicle version victim video village virus vision voice volume wall war warning water way weakness
wealth weather wedding wednesday week weekend weight west wheel wife wind window wine wing winner winter wood
wool word worker world writer writing yard year youth zone
""".split()

ADJECTIVES = """
able absolute academic acceptable accurate active actual additional administrative adorable advanced afraid
aggressive alive alternative amazing ancient angry annual anxious apparent appropriate automatic available
aware awful awkward bad basic beautiful big bitter black blind blue boring brave brief bright brilliant broad
brown busy capable careful cheap chemical civil classic clever comfortable commercial common competitive
complex comprehensive confident conscious consistent constant convenient corporate crazy creative critical
cruel cultural curious current cute dangerous dark dead deep dependent desperate different difficult digital
dirty distinct domestic dramatic due dull eager early eastern easy economic educational effective efficient
electrical electronic emotional empty entire environmental equal equivalent essential exact excellent exciting
existing expensive experienced external extra extreme fair false familiar famous fancy far fast favorite
federal final financial fine firm flat foreign formal former fortunate free frequent fresh friendly frozen
funny gentle glad global good gorgeous grand gray great green gross guilty happy hard healthy heavy helpful
high historical honest hot huge hungry ideal ill illegal immediate important impossible impressive independent
individual industrial informal inner intelligent interesting internal international jealous junior large late
latter lazy leading legal likely local logical lonely long loose loud low lucky mad main massive mean medical
mental mild moral narrow national native natural nearby neat necessary negative nervous new nice normal
northern numerous obvious odd old opposite ordinary original outstanding overall particular patient perfect
permanent personal physical plain pleasant polite political poor popular positive possible powerful practical
precious pregnant previous primary prior private probable professional proper proud psychological pure purple
quick quiet rare raw ready real realistic reasonable recent red regional regular relevant reliable religious
remarkable remote responsible rich right rough round royal rude sad safe salty scared scientific secure
senior sensitive serious severe sexual sharp short shy sick significant silent silly similar simple single
slight slow small smart smooth soft solid sorry southern spare special specific spiritual stable strange
strict strong stupid substantial successful sudden sufficient suitable sunny super sure suspicious tall
technical temporary terrible thick thin tight tiny tired tough traditional tremendous typical ugly unable
unfair unhappy unique united unlikely unusual urban useful usual valuable various vast violent visible visual
warm weak weird western wet white wide wild willing wise wonderful wooden working worried wrong yellow young
""".split()

ADVERBS = """
absolutely actually afterwards ahead altogether anyhow anymore anyway apart apparently approximately badly
barely basically carefully certainly clearly closely completely constantly currently daily deeply definitely
deliberately directly easily effectively entirely especially essentially eventually exactly extremely fairly
finally forever fortunately forward frankly frequently fully generally gently gradually greatly hardly heavily
highly honestly hopefully immediately increasingly instantly largely lately later likewise literally maybe
meanwhile merely mostly naturally nearly necessarily newly nowadays obviously occasionally online otherwise
overseas particularly partly perfectly personally possibly presumably previously primarily probably properly
quickly quietly rapidly rarely recently regularly relatively roughly sadly seriously significantly similarly
simply slightly slowly smoothly softly somehow somewhat soon specifically straight strongly suddenly surely
surprisingly tonight totally truly twice typically ultimately unfortunately usually virtually widely yesterday
""".split()

EMOTION = """
admiration adoration affection agitated agony amazement amused amusement anger anguish annoyance annoyed
anticipation anxiety apathy appreciation apprehension arousal ashamed astonished astonishment attraction awe
bitterness bliss bored boredom calmness caring cheerful cheerfulness compassion concern contempt contented
contentment craving curiosity delight delighted depressed depression despair disappointed disappointment
disgust disgusted dismay distress dread eagerness ecstasy elated elation embarrassed embarrassment empathy
enjoyment envious envy euphoria exasperation excited fearful fondness fright frightened frustrated frustration
fury gladness glee gloom gloomy gratitude grief grumpy guilt happiness hate hatred heartbroken homesick hope
hopeful hopeless hopelessness hostile hostility humiliation hurt hysteria indifference infatuation insecurity
inspiration irritation isolation joy joyful loathing loneliness longing love loving lust melancholy miserable
misery mortification mournful nostalgia nostalgic optimism optimistic outrage overwhelmed panic pessimism pity
pleased rage regret relief relieved remorse resentment satisfied serenity shame shock shocked shyness sorrow
stressed surprise surprised suspense sympathy tender tenderness terror thankful thrill thrilled triumph trust
uneasy unhappiness upset vengeful worry wrath zeal zest jealousy disdain despondent desolate crushed horrified
horrid terrified petrified startled spooked unnerved flustered rattled jittery jumpy tense restless listless
weary downcast dejected disheartened demoralized discouraged crestfallen forlorn woeful sorrowful tearful
teary weepy sulky sullen moody irritable irritated cranky cross testy touchy huffy indignant incensed livid
irate seething fuming enraged furious infuriated aggravated exasperated vexed miffed peeved resentful bitter
spiteful vindictive scornful disdainful dismissive aloof detached numb hollow empty drained exhausted fatigued
burned jaded cynical skeptical wary leery distrustful paranoid insecure timid bashful sheepish mortified
humiliated degraded belittled worthless inadequate inferior helpless powerless trapped stifled smothered
suffocated confined betrayed abandoned rejected unwanted unloved neglected ignored excluded alienated
estranged disconnected invisible misunderstood blamed accused judged criticized ridiculed mocked teased
bullied harassed threatened intimidated pressured rushed overloaded swamped buried stretched strained torn
conflicted torment tormented troubled disturbed perturbed unsettled uneasiness foreboding doom gloominess
pensive wistful yearning pining heartache heartsick lovesick smitten enamored devoted cherished adored
treasured valued affirmed validated accepted welcomed included connected grounded centered serene tranquil
peaceful placid mellow carefree lighthearted buoyant chipper perky peppy bubbly giddy gleeful jubilant
exuberant exhilarated ecstatic euphoric blissful radiant beaming grinning chuckling giggling laughing
playful mischievous silly goofy whimsical amuse gratified fulfilled accomplished triumphant victorious
vindicated empowered confident assured composed collected poised determined resolute motivated driven
ambitious inspired uplifted encouraged reassured comforted consoled soothed relieved unburdened liberated
freed renewed refreshed revitalized invigorated energized alert attentive focused absorbed engrossed
fascinated intrigued captivated enchanted spellbound mesmerized dazzled awestruck humbled grateful blessed
fortunate appreciative indebted obliged
""".split()

IRREGULAR_FORMS = """
ate beaten began begun bent bitten bled blew blown bought bound broke broken brought built burnt came caught
chose chosen crept dealt drank drawn dreamt drew driven drove drunk dug eaten fallen fed fell felt flew flown
forgave forgot forgotten fought froze gave given gone grew grown heard held hidden hung kept knew known laid
lain led lent lit lost made meant met paid ran rang rode risen rose rung sang sat saw sent shaken shone shook
shot showed shown slept sold sought spent spoke spoken sprang stood stole stolen struck stuck sung swam swept
swore sworn swum taken taught threw thrown told took tore torn understood went woke woken won wore worn wrote
written children men women feet teeth mice geese oxen lives wives knives leaves halves selves shelves loaves
thieves wolves potatoes tomatoes heroes echoes analyses bases crises theses phenomena criteria curricula
indices matrices appendices better best worse worst bigger biggest smaller smallest larger largest older
oldest younger youngest higher highest lower lowest longer longest shorter shortest stronger strongest weaker
weakest faster fastest slower slowest easier easiest harder hardest earlier earliest latest newer newest
closer closest nearer nearest deeper deepest cheaper cheapest happier happiest colder coldest warmer warmest
hotter hottest cooler coolest lighter lightest heavier heaviest simpler simplest safer safest nicer nicest
finer finest greater greatest
""".split()

NUMBERS_TIME = """
zero one two three four five six seven eight nine ten eleven twelve thirteen fourteen fifteen sixteen
seventeen eighteen nineteen twenty thirty forty fifty sixty seventy eighty ninety hundred thousand million
billion first second third fourth fifth sixth seventh eighth ninth tenth friday
""".split()

VERBS_2 = """
abandon absorb abuse accelerate accommodate accumulate accuse activate adore advertise advocate affect
aggravate alert alter amaze amend amuse appoint approximate arrest ascend aspire assault assemble assert
attain attribute audit automate await bark bat bathe battle behold betray bid blast bleed blink blossom
blur boast bolt bomb bond braid breach break brew bribe brighten bubble buckle bud budge bump bundle
burden burrow bust bustle buzz calibrate capitalize captivate carve cater cease certify chant characterize
charm cheat cherish chill chip chuckle circle circulate cite clarify clash clasp cleanse clench click cling
clip cloud clutch coach coast coincide collaborate collide colonize comfort commence commute compel
compensate compile complement complicate compliment comply comprehend compress comprise compute conceal
concede conceive condemn condense confer confess confide configure confine confront congratulate conquer
consent conserve consolidate conspire constitute constrain construct consult consume contemplate contend
contract contradict convene converge converse convey cope correlate correspond corrupt counsel counter
crave crawl creak credit creep cringe cripple criticize crouch crumble crunch crush cuddle curb cure curl
curse customize dash dazzle debate decay deceive dedicate deduce deem default defer defy degrade dehydrate
delegate delete deliberate delight demolish denote depart depict deploy deprive derive descend designate
despise detach detain deteriorate devastate deviate devise devour diagnose dictate differentiate diffuse
digest dilute diminish dine dip disable discard discharge disclose disconnect discourage disgust dispatch
dispense disperse displace dispose dispute disregard disrupt dissolve distinguish distort distract dodge
dominate donate doom dose downgrade download doze draft drain dread drift drill drip duck dump dwell ease
echo eject elaborate elevate eliminate embrace emit empower empty enact enclose endorse enforce engineer
enhance enlarge enlighten enlist enrich enroll entail entitle envision equip erase erupt escort evacuate
evaporate evoke evolve exaggerate exceed excel execute exempt exert exhale exhaust exhibit expel expire
expose extract fade falter fancy fare fetch filter finalize flag flap flare flash flatten flatter flaunt
flick flinch flip flirt flock flourish flunk flush flutter foam forge formulate foster fracture fragment
frame fret frown fuse gamble gaze gear giggle glare gleam glide glimpse glow glue gossip grade grasp graze
grieve grill grin grind grip groan groom grope grumble grunt gulp gush halt hammer hamper harden harvest
hatch haul haunt heave hinder hint hiss hoard hold honor hook hop hover howl hum humble hush hustle hype
idle illuminate immerse impair implement impose inflate inhale inherit inhibit initiate inject inquire
insert inspect inspire instruct insult integrate intensify interfere interpret intervene intimidate
irritate isolate itch jam jerk jingle jot juggle kneel lag lament lash latch lecture levy liberate license
linger litter lobby lodge long loom loop lounge lower lure lurk magnify manipulate march marvel mash mask
mature maximize mediate meditate mend merge mimic mingle minimize misplace mock mold mourn mow mumble munch
murmur mutter narrate navigate nest nibble nominate nourish nudge nurture oblige obsess obstruct officiate
omit ooze orbit orient oust outline outrage overlap overlook override overturn overwhelm pace paddle pamper
panic parade paralyze pardon pat patch patrol pave pedal peek peel peer penetrate perceive perch perish
persist pet phrase pinch pioneer pitch pity pivot pluck plug plunge poke polish ponder pop portray pose
posture pounce pound preach preside presume prevail prick probe proclaim procure prohibit project prolong
prompt prop prosecute prosper provoke prune pry publicize puff pump pursue quarrel quench quiver quote
rally ramble rank rant rate rattle rave ravage readjust reassure rebel rebound rebuild recall recite
reckon reclaim recollect reconcile reconsider reconstruct recruit rectify recycle redeem redirect redo
reload refine reform refrain refresh refund regain rehearse reign reinforce reiterate rejoice relay
relieve relish relocate remark remedy render renew renovate reorganize repay rephrase reproduce resemble
resent reserve reside resign restrain restrict resume retaliate retreat retrieve reunite revert revive
revolt revolve rhyme rid ripple roam roar roast rock roll rot rotate rub ruffle rumble rustle sabotage
sack sail salvage sanction savor scan scatter scold scoop scoot scorch scout scramble scrape scratch
scribble scroll scrub sculpt seduce seize sense sentence shatter shave shed shelter shield shiver shove
shovel shred shrink shrug shuffle sigh simmer simplify simulate sip situate sketch skim skip slam slap
slash slay slice slump smash smear smuggle snap snatch sneak sniff snore snort snuggle soak soar sob
soften soothe spare spark sparkle specialize speculate spike spit splash sponsor spot sprinkle sprint
sprout spur squat squeak squeal squeeze squint stab stabilize stack stagger stain stall stamp standardize
starve steer stem stimulate sting stink stitch stoop strain strand strangle strap stray streamline
strengthen stress stride strip strive stroke stroll strum stumble stun stutter subscribe subside
substitute subtract suck sue summarize summon supervise surge surpass surrender suspect suspend sustain
swallow swap sway swell swipe swirl tackle tag tame tangle taste taunt tease terminate terrify testify
thicken thrash thread thrive throb thrust thump tick tickle tilt time toast tolerate toss tow trace trade
trail trample transcend transmit transplant transport trap tread trek trespass trigger trim triple
triumph trot tuck tug tumble tutor twinkle twirl twist unfold unify unleash unload unlock unpack unravel
unveil unwind uphold upload upgrade utilize utter validate vanish vent venture verify veto vibrate
violate vow wade wag wager wail wander warrant weave weep whine whip whirl whistle widen wiggle wince
wink wipe wither witness wobble worsen wound wreck wrestle wring yank yawn yearn yell yield zoom
""".split()

NOUNS_2 = """
abbreviation abdomen abortion abundance academy accessory accountant accusation ace achiever acre acrobat
adjective admiral admission adolescent adoption adverb aftermath aftertaste algebra alibi alley alligator
allowance alloy almond alphabet altar altitude aluminum amateur ambulance amendment ammunition amphibian
anatomy ancestor anchor anecdote angel anthem antibiotic antique anxiety apology apparatus apparel appendix
appetite applause appliance applicant apprentice apricot aquarium arch archer architect architecture archive
arena arithmetic armchair armor arrow arson artery artifact ash asparagus asphalt aspirin assembly asset
asterisk asthma astronaut astronomer astronomy asylum athlete atlas atom attic attorney auction audit
auditorium avalanche avenue aviation avocado axis bachelor backbone backpack backyard bacon bacteria badge
bait bakery balcony ballad ballet balloon ballot bamboo banjo banker bankruptcy banner banquet baptism
barber barge barley barn barrel barrier bartender basement basin bat bazaar beacon beak beam beast beetle
beggar behalf behavior belief believer belly beloved benchmark beverage bias bible bibliography bid
billboard bin biography biology birch biscuit bishop bison blackboard blacksmith bladder blade blast blaze
blazer blender blessing blister blizzard blob blockade blond blouse blueprint blur boar boardroom bolt
bomb bomber bonfire bookcase booklet bookstore boom booth bootstrap borough botany boulder boulevard
bouquet boutique bowler boxer bracelet bracket braid brainstorm brake bran brand brandy brass bravery
breadth breakdown breakthrough breakup brewery bribe bribery bride bridegroom briefcase brigade brim
broccoli brochure broker bronze brook broom broth brotherhood brow brownie bruise brunch brunette bubble
bucket buckle buddy buffalo buffet bug builder bulb bulk bull bulldozer bullet bulletin bumper bun bundle
bunk bunker burden bureau burglar burial burrito bust butcher butterfly buzzer cab cabbage cabin cafe
cafeteria caffeine cage calculator calculus calf calorie camel campus canal canary cane canoe canopy
canteen canvas canyon capsule caption caramel caravan carbon cardboard cardigan cargo carnival carol
carpenter carriage cart cartel cartoon cartridge carving cashier casino casket casserole cassette
catalog catastrophe caterpillar cathedral cattle cauliflower caution cavalry cave cavern cavity cedar
celebration celebrity celery cello cemetery census ceramic cereal certificate chalk chamber chandelier
chaos chapel chariot charm charter chassis chauffeur checklist checkout checkpoint checkup cheer chef
cherry chess chestnut chick chili chime chimney chin chimpanzee chord chore chorus chrome chunk cider
cinema cinnamon circuit circulation circus citizen citizenship clam clamp clan clarinet clarity clause
claw clay cleaner clearance clearing cleavage clergy clerk cliff climax climber clinic clip clipboard
cloak clone closet closure clot clove clown clue cluster clutch coal coalition cobweb cockpit cocktail
cocoa coconut cod coffin cognition coil coin coincidence colander collision cologne colonel colony
comb combat comedian comedy comet commander commentary commentator commerce commodity commuter companion
compartment compass competence competitor complexion complexity compliance component composer composition
compost compound compromise comrade concession concrete condo conductor cone confession confetti
confrontation congregation congress conjunction conquest conscience consensus conservation console
consonant conspiracy constable constellation constitution consultant consumption contingency continuity
contractor contradiction contrary convent convention convict conviction convoy coordination cop cord
cork corps corpse corral correlation corridor corruption cortex cosmetics costume cottage cough
councilman counselor countdown counterpart countryside coup courier courtesy courtroom courtyard
coverage coyote crab cradle cramp crane crater crayon creek crest cricket crib critic critique crocodile
crop crossing crossroads crossword crow crown crumb crust crutch crystal cub cube cubicle cucumber cue
cuff cuisine culprit cult cupboard curfew curriculum curry cursor curtain cushion custard custody custom
cutback cylinder cymbal dagger dairy daisy dam dame damages dandelion dart dashboard database daybreak
daydream deadline deadlock deaf dean debris debut decay deck declaration decline decor decoration decree
deduction deed deer default defeat defect defendant defense deficiency deficit delegate delegation deli
delicacy delinquent delta demo democracy demographic demolition demon denial denim denominator dent
dentistry depot depression deputy descendant descent designer desperation dessert destination destiny
destruction detective detention detergent detour devotion dew diagnosis diagram dial dialect dialogue
diameter diaper diary dice dictator dictatorship dictionary digit dignity dilemma dime dimension diner
dinosaur dioxide diploma diplomat directive directory disability disadvantage disagreement disappearance
disbelief disc discharge disciple disclosure discourse discovery discrepancy discretion discrimination
disgrace disguise dishwasher disk dismissal disorder dispatch dispatcher displacement disposal
disposition disruption dissent dissertation distinction distortion distraction ditch divide dividend
diver diversion diversity divine divine divorce dock dockyard doctrine documentary documentation dodge
doll dollar dolphin domain dome dominance donation donkey donor doorbell doorstep doorway dormitory
dosage dose dossier dove drain drainage drape dresser dressing dribble drift drill driveway drizzle
drone drought drum drumstick dryer duchess duck duct dude duel dug dugout duke dumpling dune dungeon
duo duplicate durability duration dusk dwarf dwelling dye dynamics dynamite dynasty eagle earthquake
easel eater eatery eavesdropper eclipse ecologist ecology ecosystem edible editorial educator eel
effectiveness elaboration elasticity elbow elder electorate electrician electron elegance element
elephant eligibility elite elm eloquence embargo embassy ember emblem embrace embryo emerald emigrant
emission emitter empire employ emptiness enactment enclosure encore encouragement encyclopedia
endeavor ending endorsement endurance enforcement engagement engraving enigma enlargement enlistment
enrollment ensemble enterprise entirety entity entourage entrepreneur envelope epidemic equation
equator equilibrium equity era erosion errand escalator escort espionage essence establishment
esteem estuary eternity ethic ethics etiquette evacuation evaluation evaporation evolution
exaggeration excavation excellence exception excerpt excess exclamation exclusion excursion execution
executive exemption exhaust exhaustion exhibit exhibition exile existence exodus expansion expectation
expedition expenditure expense expertise expiration exploitation exploration explosion explosive
exponent exposure extension exterior extinction extract extraction extremist eyebrow eyelash eyelid
eyesight eyewitness fable fabric fabrication facade facet facilitator facility faction faculty fad
fairy fairness fallout fame famine fare farewell fascination fatality fate fatigue faucet fauna feast
feat feather federation fellowship felony ferry fertility fertilizer fever fiber fiddle fidelity
fig fighter filament filter fin finale finance financing finder fine finesse fingerprint fingertip
finish fir firearm firefighter fireplace firework firmware fixture flagship flake flame flamingo
flannel flare flashlight flask fleet flesh flick flight flint flip flock flood floodlight floorboard
flora florist flu fluctuation fluency fluid flush flute flyer foam fog foil folder foliage folk
follower folly fondness font forecast forefront foreground forehead foreigner foreman forerunner
forgery forgiveness formality formation formula fort fortress forum fossil foul fowl fox fraction
fragment fragrance frailty franchise fraud freak freckle freelancer freezer freight frenzy frequency
freshman friction fridge fringe frog frontier frost froth fugitive fulfillment fumes functionality
fundraiser fungus funnel fur furnace furniture fury fuse fusion fuss gadget gala galaxy gallery gallon
gallows gamble gambler gang gangster gap garlic garment gasoline gasp gathering gauge gazette gel
gem gender generation generator generosity genius genre gentleman geography geology geometry germ
gesture ghost giant gig giggle gill ginger giraffe girder glacier gladiator glamour gland glare glaze
glimpse glitch glitter globe gloom glory glossary glove glow glue goat goddess goggles goodness
goodwill goose gorilla gospel gown grace graduate graduation graffiti grammar grandchild granddaughter
grandeur grandson granite grape grapefruit graph grasp grasshopper gratification grave gravel
graveyard gravity gravy grease greed greenhouse grenade grid griddle grief grievance grill grimace
grin grinder groan grocer grocery groom groove grove grudge guardian guerrilla guideline guild
guilt guitarist gulf gull gut gutter gym gymnasium gymnast habitat hail haircut hairstyle hallway
halt ham hamburger hamlet hammer hammock hamper hamster handbag handbook handful handgun handkerchief
handler handshake handwriting hanger hangover harbor hardship hardware hare harm harmony harness harp
harvest hassle hastiness hatch hatchet haven havoc hawk hay hazard haze headache headline headphone
headquarters headset heap hearing hearse hearth heartbeat heater heaven hedge heel heir heirloom
helicopter helm helmet helper hemisphere hen herb herd heritage hermit hesitation hiccup hierarchy
hike hiker hilltop hint hipster historian hive hoax hobby hockey hog hoist holder hollow homeland
homicide homage honesty honeymoon honor hood hoof hop horizon hormone horn horseback hose hosiery
hostage hostel hound hourglass housework hub hug hull humanity humidity hummingbird hunch hunk hunter
hurdle hurricane hut hybrid hydrant hydrogen hygiene hymn hypocrisy hypothesis icicle icing icon
ideology idiom idiot idol igloo ignition ignorance iguana illness illusion illustration illustrator
immigrant immigration immunity imprisonment inauguration incentive inch incision inclination inclusion
increment incumbent indicator indictment indigestion infant infantry infection inference infinity
influx informant infrastructure inhabitant inheritance inhibition initiation injection injustice ink
inlet inmate inn innovation input inquiry insanity inscription insertion insight insignia insistence
insomnia installation installment instinct institute institution instructor instrument insulation
insult intake integration integrity intellect intelligence intensity intent interface interference
interior intermission intern interpretation interpreter intersection interval intervention intestine
intimacy intruder intuition invasion inventory inversion invoice involvement irony irrigation itch
itinerary ivory ivy jail janitor jar jargon jaw jazz jeans jeep jelly jellyfish jet jewel jewelry
jigsaw jockey jog jogger jolt journal journalism journalist jug juggler junction jungle junior junk
jurisdiction juror jury justification juvenile kangaroo kayak keeper keg kennel kernel kettle keyboard
keynote kidney kilogram kilometer kin kingdom kiosk kit kite kitten knack knob knot koala lace ladle
lagoon lamb lament lamp lance landfill landing landlady landlord landmark landscape landslide lane
lantern lap lapse larceny lark larva laser lash lasso latch lathe latitude laughter laundry lava
lavatory lawn lawsuit layout layover leaflet leak leakage leap lease leash ledge ledger leftover
legacy legend legion legislation legislature legitimacy lemon lemonade lender lentil leopard lettuce
levee lever liability liaison liar liberation liberty librarian lid lieu lieutenant lifeguard lifeline
lifespan lifestyle lifetime ligament lighthouse lighting lightning lily limb lime limestone limitation
limo limousine linen liner lineup linguistics lining lion liquid liquor listener listing litter
livelihood liver livestock lizard lobby lobbyist lobster locality locker locomotive locust loft logic
logo loin loneliness longevity longitude lookout loom loop loot lord lotion lottery lotus lounge
louse lumber lump lung lure luxury lyric macaroni machinery madam madness maggot magician magistrate
magnet magnitude mahogany maid maiden mainframe mainland mainstream majesty majority makeover makeup
malaria mammal mandate mane maneuver mango manifesto mankind mansion mantle manual manure manuscript
maple marathon marble mare marina mariner marker marketplace marrow marsh marshal mascara mascot
mask mason masquerade massacre massage mast mat matchmaker mate mathematician matrix mattress
mausoleum maverick mayor maze meadow meadowlark mechanic mechanism medal medallion mediator medication
melody melon membrane memo memoir memorandum memorial menace mentor merchandise merchant mercy
meridian merit mermaid metaphor meteor meter metro metropolis microphone microscope microwave
midfield midst midterm midwife migraine migrant migration mile mileage milestone militia mill
millionaire mime mimic mineral miniature minibus minivan minority mint miracle mirage miscarriage
mischief misconception misconduct misery misfortune mishap missile missionary mist mite mitt mitten
moat mob mobility moisture molar mold mole molecule momentum monarch monarchy monastery monk monkey
monopoly monsoon monster monument moose mop morale morality morgue mosaic mosque mosquito moss motel
moth motif motivation motive motorcycle motorist motto mound mount mourning mouthful mover mower
mule multitude mummy municipality mural murder murderer muse mushroom musician mustache mustard
mutation mutiny mutter muzzle mystery myth nap napkin narrative nationality naval navigation navy
nebula necessity necklace nectar needle negligence neighbor neighborhood nephew nest nettle neuron
neutrality newsletter niche nickel nickname niece nightclub nightfall nightgown nightingale nightmare
nobility noble nod nomad nomination nominee noodle nook noon norm notebook notification notion nougat
nourishment novelist novelty novice nozzle nuance nucleus nuisance nun nursery nutrition nylon oasis
oath oatmeal obesity obituary objection objective oboe observance observation observatory observer
obsession obstacle obstruction occupancy occupant occupation occurrence octave octopus odometer odor
offense offering offspring ointment olive omelet omen onion onlooker onset opera operator opponent
opposition oppression optimist oracle orbit orchard orchestra orchid ordeal ordinance ore organ
organism organizer orientation ornament orphan orphanage ostrich otter ounce outbreak outburst outcast
outfit outing outlaw outlet outlook outpost output outrage outsider outskirts oval ovation overcoat
overdose overflow overhaul overhead overlap overload overpass oversight overtime overture owl ox
oxygen oyster pace pacemaker pact pad paddle padlock pagan pageant pail palace palette palm pamphlet
pancake panda panel panic panorama panther pantry pants papaya parachute paradox paragraph parakeet
parallel paralysis paramedic parasite parcel parchment pardon parish parliament parlor parole parrot
parsley partition partnership pastime pastor pasture patch patent patio patriot patrol patron
patronage pavement pavilion paw payload payoff payroll pea peacock peak peanut pear pearl peasant
pebble pecan peck pedal pedestal pedestrian pediatrician pedigree peek peel peer pelican pellet pelt
penguin peninsula pension pensioner peony pepper perch percussion perfection perfume peril perimeter
periodical perjury perk permit perpetrator persistence personnel persuasion pest pesticide petal
petition petroleum petticoat pew pharmacist pharmacy pheasant phenomenon philosopher phobia phoenix
phonetics photocopy photograph photographer photography physician physicist physiology physique
pianist pickle pickup picnic pier pigeon pigment pike pile pilgrim pilgrimage pill pillar pillow
pilot pimple pinch pine pineapple pinnacle pint pioneer piracy pirate pistol piston pit pitcher
pitfall pivot placard placement plague plaintiff plank planner plantation planter plaque plasma
plaster playground playhouse playoff playwright plaza plea plead pledge plight plot plow plum plumber
plumbing plume plunge plural plutonium plywood pneumonia pocket pod podium poise poison poker polarity
pole polio politician polka pollen poll pollster pony poodle popcorn poppy popularity porch pore pork
porridge port portal porter portfolio portion portrait postage postcard poster posterity postponement
posture potassium potential pottery poultry powder practitioner prairie precaution precedent precinct
precision predator predecessor predicament prediction preview prey priesthood primate prince princess
principal printer printout privacy privilege probation probe procession processor prodigy producer
production productivity profanity proficiency prognosis prohibition projection projector proliferation
prominence promenade proximity prophecy prophet proponent proportion proprietor prose prosecution
prosecutor prospect prosperity protagonist protein protocol prototype protractor provider province
provision provocation prowess proxy prudence psychiatrist psychologist puberty publication publicity
publisher puddle pulley pulp pulse puma pump pumpkin punch punctuation puncture punishment pupil
puppet puppy purification purity pursuit pushup putt puzzle pyramid python quarry quart quartz quest
questionnaire quicksand quilt quota quotation rabbi rabbit raccoon racism rack racket radar radiation
radiator radish raffle raft rag rage raid rail railing railroad railway rainbow raincoat rainfall
rainforest raisin rake rally ramp ranch rancher ranger ransom rape rapids rapport rarity rascal rash
raspberry rat ration rationale rattle ravine ray rayon razor reactor readiness readout realm reaper
rearrangement rebate rebel rebellion rebirth rebound rebuttal receipt receiver reception receptionist
recess recession recipient recital recitation reckoning reclamation recollection reconciliation
reconnaissance reconstruction recorder recreation recruit recruitment rectangle rector recurrence
redemption redhead reduction redundancy reed reef reel referee referendum referral refinery reflex
reform refuge refugee refund refusal regime regiment registration registry regression regulation
regulator rehab rehabilitation rehearsal reign rein reindeer reinforcement relapse relay relegation
reliability reliance relic relocation reluctance remainder remains remedy reminder remission
remnant remorse removal renaissance rendezvous renewal renovation rendition repayment repertoire
repetition replica reporter repository representation representative repression reprimand reprisal
reproach reproduction reptile repute resemblance reservation reservoir residence residue resignation
resilience resin resistance resolve respondent restoration restraint restriction resume resurgence
resurrection retailer retaliation retention retina retreat retrieval reunion revelation revenge
reversal review revival rhetoric rhino rhubarb rib ribbon riddle rider ridge rifle rift rig rigging
rim rind riot rip ripple rite ritual rival rivalry riverbank roadblock roadside roast robber robbery
robe robin robot rocket rod rodent rodeo rogue romance rook rookie roommate rooster root roster
rotation rotor rouge roulette roundabout roundup rover rubber rubble ruby rudder rug rugby ruin
ruler rum rumble rumor rung runner runoff runway rupture rust rut sabbath saber sabotage sack
sacrifice saddle safari saga sage sail sailor saint sake salamander salesman salmon salon saloon
salsa salute salvation sanctuary sanction sandal sandstone sanity sap sapphire sardine satellite
satire saucer sauna sausage savage savings savior saw sax saxophone scaffold scaffolding scalp
scandal scanner scar scarcity scarecrow scarf scenario scenery scent scepter scholar scholarship
schooling schooner scope scorn scorpion scoundrel scout scrap scrapbook scratch scream screech
screwdriver scribe scrimmage scroll scrutiny sculptor sculpture scythe seafood seagull seal seam
seaman seaport searchlight seascape seashore seasoning seatbelt seaweed secrecy sect sedan sediment
seduction seed seeker segment segregation seizure semester seminar senate senator sensation
sensitivity sentiment sentinel sentry sequel sequence serenade sergeant serial sermon serpent serum
servant server service serving sesame setback settlement settler setup sewage sewer shack shackle
shade shadow shaft shale shampoo shamrock shark shawl shear shed sheen sheep sheet shelf shell
shepherd sheriff shield shin shingle shipment shipwreck shipyard shiver shoal shock shoelace
shoemaker shoot shopper shore shortage shortcut shotgun shovel showcase showdown shower showroom
shrapnel shred shrewdness shriek shrimp shrine shrub shrug shutter shuttle sibling sickness sidewalk
siege sieve silk sill silo silhouette similarity simplicity sin sinew singularity sink sinner sip
siren sirloin sitter skeleton skeptic sketch skewer ski skier skillet skipper skirmish skull skunk
skyline skyscraper slab slack slalom slang slap slate sled sledge sleet sleeve sleigh slick slider
slime sling slipper slogan slope slot sloth slum slumber smash smile smog smoker smuggler snack snail
snake snapshot sneaker sneeze snippet snob snorkel snout snowfall snowflake snowman snowstorm soap
soccer socialite sociology sod soda sofa softball solace solicitor solitude solo solvent sonata
sonnet soot sophistication soprano sorcerer sorcery sore sorting souvenir sovereign sovereignty spa
spade spaghetti span spaniel spark sparrow spasm spatula spawn spear specialist specialty specimen
speck spectacle spectator specter spectrum speculation speedway spell sphere spice spider spike
spinach spindle spine spiral spire spit spleen splendor splinter spokesman sponge spool spoon spore
spouse spout sprain spray spree sprig sprinkler sprout spruce spur spy squad squadron squall square
squash squid squirrel stab stability stack stadium stagecoach stain staircase stairway stake
stakeholder stalk stall stallion stamina stamp stampede stance stanza staple starch stardom starfish
starlight startup starvation stash statesman statistic statue stature statute steam steamboat steed
steel steeple stein stem stencil stenographer stereo stereotype stern stew steward stick sticker
stimulus sting stinger stipend stitch stockbroker stocking stockpile stool stopwatch store storekeeper
stork stove stowaway strain strait strand strap straw strawberry streak stream streamer streetcar
stretcher stride strife strike striker strip stripe stroke stroll stroller stronghold struggle strut
stub stubble stud studs stump stunt sturgeon subcommittee subdivision submarine submission subscriber
subscription subsidiary subsidy substitution subtitle subtlety suburb subway successor suction suds
suede suffering suffix sulfur sultan summary summit summons sunburn sundae sunflower sunlight sunrise
sunset sunshine superintendent superiority supermodel superstar superstition supervision supervisor
supplement supplier suppression supremacy surcharge surf surface surfer surge surgeon surname surplus
surroundings surveillance survival survivor suspension suspicion swab swagger swamp swan swarm swatch
sweat sweater sweatshirt sweep sweetheart swing sword swordfish syllable symbol symmetry symphony
symptom synagogue syndicate syndrome synonym synthesis syntax syrup tab tabernacle tablespoon tablet
tabloid tack tackle taco tact tactic tadpole tail tailor takeover talent talker tan tangerine tangle
tanker tantrum tapestry tar tarantula tariff tarp tart taxation taxi taxpayer teamwork teapot
teaspoon technician technique teen teenager telegram telegraph telescope teller temper temple tempo
temptation tenant tendency tendon tenor tent tenure termite terrace terrain territory terror
terrorism terrorist testament testimony tether textbook texture theater theft theology therapist
therapy thermometer thermostat thesis thicket thief thigh thimble thorn thread threat threshold
thrift throne throng throttle thumb thunder thunderstorm tiara tick tide tiger tile till tilt timber
timeline timer tin tint tissue toad toast toaster tobacco toddler toll tollbooth tomb tombstone
ton toolbox topping torch tornado torpedo torso tortoise torture tote totem toucan touchdown
tournament tow tractor trademark trader trait traitor trajectory tram trampoline tranquility
transaction transcript transformation transfusion transistor transit translation translator
transmission transmitter trapeze trauma tray treadmill treason treasure treasurer treasury treaty
trellis tremor trench trend trespasser trial triangle tribe tribunal tributary tribute trifle
trigger trilogy trinket trio triplet tripod triumph trolley trombone troop trooper trophy tropics
trout trowel truce trumpet trunk trustee tub tuba tube tuition tulip tumbleweed tumor tuna tundra
tunic tunnel turbine turbulence turf turkey turmoil turnaround turnip turnout turnover turnpike
turret turtle tusk tutor tutorial tuxedo tweed tweezers twig twilight twin twine typewriter typhoon
typist tyranny tyrant udder ultimatum umbrella umpire underdog undergraduate underground undertaker
undertaking underwear unemployment unicorn uniform unison universe upbringing upheaval upholstery
upkeep uprising uproar upturn uranium urgency urn usage usher utensil utility utterance vaccination
vaccine vacuum vagabond valor valve vampire van vandal vandalism vanguard vanilla vanity vapor
variable variance varnish varsity vase vault vegetation vein velocity velvet vendetta vendor veneer
vengeance venison venom vent ventilation venture venue veranda verb verdict verge vermin verse
version vertebra vessel vest veteran veterinarian veto viaduct vial vibration vicinity victory
viewer viewpoint vigil vigilance vigor villa villain vine vinegar vineyard vintage vinyl viola
violation violence violet violin violinist viper virtue visa visibility visitor vista vitality
vitamin vocabulary vocalist vocation vogue void volcano volley volleyball volt voltage volunteer
vomit vortex voucher vow vowel voyage vulture wad wafer waffle wage wagon waist waiter waitress
waiver wake walkway wallet walnut walrus waltz wand wanderer ward warden wardrobe warehouse warfare
warhead warmth warranty warrior wart wasp watchdog waterfall watermelon waterproof watt wax weaver
web wedge weed weekday weevil welfare whale wharf wheat wheelchair whim whirlwind whisk whisker
whiskey whisper whistle wick widget widow widower width wig wilderness wildfire wildlife willow
windmill windshield wink wisdom wit witch withdrawal wizard wolf womb wonderland workbench workload
workout workshop worm worship wound wreath wreck wreckage wren wrench wrestler wrinkle wrist
wristwatch yacht yam yarn yearbook yeast yolk zebra zeppelin zinc zipper zodiac zombie
""".split()

ADJECTIVES_2 = """
abrupt absent absurd abundant adamant adept adjacent adverse affluent agile ajar alarming alert allied
aloof ample amusing apt arid arrogant artistic ashamed assertive astute athletic atrocious attentive
audacious austere authentic avid baggy bald bare barren bashful beloved benevolent bent bizarre bland
bleak blissful blunt blurry boastful boiling bold bossy bouncy boundless brash brisk brittle bulky
bumpy burly candid catchy cautious charming chilly chubby chunky circular civic coarse colonial
colossal compact composed concise condemned confidential congested considerate conspicuous content
cordial costly courageous courteous cozy cramped crisp crooked crude crunchy cryptic cuddly cumbersome
cunning curly curved cushy cylindrical dainty damp dapper daring dazzling decent deceptive decisive
defective defiant deficient deft delectable deliberate delicate delicious delightful dense dented
dim diminutive dingy diplomatic discreet dismal disposable distant distinct distorted diverse divine
dizzy dormant doting doubtful downhill drab drastic dreary drowsy durable dutiful dynamic earnest
earthy eccentric edgy eerie elaborate elastic elated elderly electric elegant elusive eminent
emphatic endless enduring energetic enormous enticing erratic ethical euphoric evasive evergreen
evident exotic expansive expressive exquisite extraneous exuberant faint faithful fake fatal feeble
feisty fertile fervent festive fickle fierce fiery filthy fitting flaky flamboyant flashy flawless
fleeting flexible flimsy floppy fluent fluffy fluid foggy foolish forceful forgetful forthright frail
frank frantic frayed frigid frilly frisky frivolous frugal fruitful futile fuzzy gaudy gaunt generic
generous genuine giddy gigantic glamorous glaring gleaming glib glossy golden graceful gracious
grandiose graphic grateful grave greasy greedy gritty groggy grouchy grubby gruesome gruff gullible
gusty hairy handsome handy haphazard hapless harsh hasty haughty hazy hearty hectic hefty heroic
hesitant hideous hilarious hoarse hollow homely hospitable hostile humble humid humorous husky icy
idle idyllic imaginative immaculate immense imminent impartial impeccable imperfect impolite
impractical impulsive inborn incisive incompetent incomplete indelible indignant indirect indulgent
inept inert infamous infantile infectious inferior infinite informative ingenious inland innate
innocent inquisitive insistent intact intent intrepid intricate intriguing invaluable inventive
invincible irate jaded jagged jaunty jittery jolly jovial joyous jubilant juicy jumbled jumbo keen
knobby knotted lame lanky lavish lawful leafy lean legitimate lethal light limber limp literate
lively livid lofty lopsided lousy lovable lovely loyal ludicrous lumpy lush lustrous luxurious
majestic makeshift mammoth mature meager measly meaty meek mellow melodic memorable menacing merciful
mere merry messy mighty mindless minty miserly misty modest moist monstrous monumental moody mundane
murky muscular mushy musty muted mysterious naive nasty nautical needy nimble nocturnal nonchalant
nondescript nonstop nostalgic notable noted noteworthy noxious nutritious obedient oblique oblong
obnoxious obscure observant obsolete obstinate offbeat offensive onerous opaque optimal opulent
ornate orderly organic ornery outgoing outlandish outrageous overdue overt palatable pale paltry
parched partial passionate pastel peppery perky perpetual pesky pessimistic petty picturesque pink
pitiful pivotal placid playful plump plush pointed pointless polished pompous porous portable posh
potent precise premium pricey prickly pristine prompt pronounced prudent pung punctual pungent puny
pushy quaint qualified quarrelsome queasy quirky radiant ragged rambunctious rampant rancid rapid
rash ravenous reckless refined reflective regal reluctant reminiscent repentant repulsive resilient
resolute resourceful respectful rigid rigorous ripe risky robust rosy rotten rowdy ruddy rugged
runny rural rusty sane sarcastic sassy savory scaly scanty scarce scattered scenic scholarly scrawny
scruffy seamless seasoned secluded sedate seasoned selective serene shabby shadowy shaggy shallow
shameful shimmering shiny shoddy showy shrewd shrill silky sincere sinful skeletal skeptical sleek
sleepy slick slimy slippery sloppy sluggish smug snappy sneaky snug soggy somber sophisticated sour
sparkling sparse spirited spiteful splendid spontaneous sporadic spotless spry squeaky squeamish
stale stark stately staunch steadfast steady steep sticky stiff stingy stodgy stoic stout
straightforward strenuous stunning sturdy stylish subdued subtle succinct succulent sulky sultry
superb superficial superstitious supple supreme surly svelte swanky sweeping swift tactful tactless
tame tangible tardy tart tasteful tasteless tasty tattered tedious tempting tender tepid terse
thankless thorny thorough thoughtful thrifty thriving tidy timely timid tolerant toothsome torrid
tranquil treacherous tricky trite trivial truthful tubby turbulent twinkling unanimous uncanny
uncouth unruly unsightly untidy upbeat uptight utter vacant vague vain valiant vapid vengeful
verbose versatile vibrant vicious vigilant vigorous vile vivacious vivid vocal volatile voracious
vulgar wary watery wavy wholesome wicked windy winding wiry wistful witty wobbly woeful worthy
wretched yummy zany zealous zesty
""".split()

# verbs whose past tense is not formed with -ed
NO_ED = set(
    """bear beat become begin bend bet bind bite blow break breed bring broadcast build burst buy cast catch
    choose come cost cut deal dig dive draw dream drink drive eat fall feed feel fight find flee fly forbid
    forget forgive freeze get give go grow hang have hear hide hit hold hurt keep know lay lead leap leave
    lend let lie light lose make mean meet overcome owe pay put quit read ride ring rise run say see seek
    sell send set shake shine shoot show shut sing sink sit sleep slide speak spend spill spin split spread
    spring stand steal stick strike swear sweep swim swing take teach tear tell think throw understand
    undertake wake wear win write""".split()
)

# final consonant doubles before -ed/-ing
DOUBLING = set(
    """ban bar beg bet chat chop clap commit control drag drop fit grab hug jog knit nod occur pat permit
    plan plot prefer refer regret rub shop sip skip slip step stir stop submit swap tap tip trap trim
    wrap""".split()
)

VOWELS = "aeiou"


def verb_forms(verb: str) -> list[str]:
    forms = []
    # third person singular
    if verb.endswith(("s", "sh", "ch", "x", "z", "o")):
        forms.append(verb + "es")
    elif verb.endswith("y") and verb[-2] not in VOWELS:
        forms.append(verb[:-1] + "ies")
    else:
        forms.append(verb + "s")
    # -ing
    if verb in DOUBLING:
        forms.append(verb + verb[-1] + "ing")
    elif verb.endswith("ie"):
        forms.append(verb[:-2] + "ying")
    elif verb.endswith("e") and not verb.endswith(("ee", "oe", "ye")):
        forms.append(verb[:-1] + "ing")
    else:
        forms.append(verb + "ing")
    # -ed
    if verb not in NO_ED:
        if verb in DOUBLING:
            forms.append(verb + verb[-1] + "ed")
        elif verb.endswith("e"):
            forms.append(verb + "d")
        elif verb.endswith("y") and verb[-2] not in VOWELS:
            forms.append(verb[:-1] + "ied")
        else:
            forms.append(verb + "ed")
    return forms


UNCOUNTABLE = set(
    """advice clothes economics equipment evidence furniture information knowledge luggage mathematics math
    money music news people physics politics progress research software thanks traffic data media police
    scissors species series staff""".split()
)


def plural(noun: str) -> str | None:
    if noun in UNCOUNTABLE or noun.endswith(("ics", "ness")):
        return None
    if noun.endswith("y") and noun[-2] not in VOWELS:
        return noun[:-1] + "ies"
    if noun.endswith(("s", "sh", "ch", "x", "z")):
        return noun + "es"
    if noun.endswith("fe"):
        return noun[:-2] + "ves"
    if noun.endswith("man"):
        return noun[:-3] + "men"
    return noun + "s"


def build() -> list[str]:
    bands: list[list[str]] = [
        FUNCTION,
        CONVERSATIONAL,
        [f for v in VERBS for f in [v] + verb_forms(v)],
        [f for n in NOUNS for f in [n, plural(n)] if f],
        ADJECTIVES,
        ADVERBS,
        [f for n in EMOTION for f in [n, plural(n)] if f],
        IRREGULAR_FORMS,
        NUMBERS_TIME,
        [f for v in VERBS_2 for f in [v] + verb_forms(v)],
        [f for n in NOUNS_2 for f in [n, plural(n)] if f],
        ADJECTIVES_2,
    ]
    seen: set[str] = set()
    out: list[str] = []
    for band in bands:
        for word in band:
            word = word.strip().lower()
            if word and word not in seen:
                seen.add(word)
                out.append(word)
    return out[:10000]


def main() -> None:
    words = build()
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(words) + "\n", encoding="utf-8")
    print(f"wrote {len(words)} words to {OUT}")
    for probe in ("test", "exam", "the", "happy", "jealousy"):
        assert probe in set(words), probe


if __name__ == "__main__":
    main()
