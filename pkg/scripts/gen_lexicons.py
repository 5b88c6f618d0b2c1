#!/usr/bin/env python3
"""Regenerate the bundled lexicon data files under src/argsum/data/.

Word material is curated here and expanded with regular English morphology
(noun plurals, verb inflections). Run from the repository root:

    python scripts/gen_lexicons.py
"""
from __future__ import annotations

from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "argsum" / "data"

# ---------------------------------------------------------------------------
# stopwords (~150, the usual closed-class core plus frequent contractions)

STOPWORDS = """
a about above after again against all am an and any are aren't as at be
because been before being below between both but by could did do does doing
down during each few for from further had has have having he her here hers
herself him himself his how i if in into is it its itself just me more most
my myself no nor not of off on once only or other ought our ours ourselves
out over own same she should so some such than that the their theirs them
themselves then there these they this those through to too under until up
very was we were what when where which while who whom why will with would
you your yours yourself yourselves i'm i've i'll i'd you're you've you'll
you'd he's she's it's we're we've they're they've that's there's here's
what's who's let's isn't don't doesn't didn't won't wouldn't couldn't
shouldn't wasn't weren't hasn't haven't can't cannot
""".split()

# ---------------------------------------------------------------------------
# sentence-split blocking abbreviations (stored with the trailing period)

ABBREVIATIONS = """
mr. mrs. ms. dr. prof. st. jr. sr. etc. e.g. i.e. vs. cf. fig. inc. ltd.
corp. capt. sgt. lt. col. maj. mt. approx. dept. misc. oz. lb. u.s. u.k.
a.m. p.m. ph.d. b.c. a.d. jan. feb. aug. sept. oct. nov. dec.
""".split()

# ---------------------------------------------------------------------------
# verbs: lemma list expanded to inflected forms

VERB_LEMMAS = """
be have do say get make go know take see come think look want give use find
tell ask work seem feel try leave call need become mean keep let begin help
talk turn start show hear play run move like live believe hold bring happen
write provide sit stand lose pay meet include continue set learn change lead
understand watch follow stop create speak read allow add spend grow open walk
win offer remember love consider appear buy wait serve die send expect build
stay fall cut reach kill remain suggest raise pass sell require report decide
pull return explain hope develop carry break receive agree support hit produce
eat cover catch draw choose cause point listen realize place close involve
increase defend argue claim prove state assume discuss debate respond reply
answer question challenge deny admit accept reject refuse insist maintain
assert contend imply infer conclude reason justify blame accuse attack
criticize mock insult praise thank apologize forgive ignore dismiss address
mention note observe remark acknowledge concede clarify elaborate emphasize
stress repeat restate summarize quote cite reference define describe compare
contrast relate connect link associate imagine suppose guess wonder doubt
trust suspect fear worry care mind matter count depend rely base found
establish form shape affect impact influence convince persuade encourage
discourage warn threaten promise guarantee predict estimate measure calculate
compute determine identify recognize notice detect discover reveal expose
hide conceal protect guard save rescue harm hurt injure damage destroy ruin
wreck violate obey comply resist oppose fight battle struggle compete
cooperate collaborate share divide separate split join unite combine merge
mix match fit suit belong own possess control manage handle operate drive
ride fly sail travel visit arrive depart enter exit settle occupy inhabit
reside marry divorce date dislike prefer favor select pick elect vote appoint
assign authorize permit forbid ban prohibit restrict limit regulate govern
rule legislate enforce punish penalize jail imprison arrest charge convict
sentence acquit appeal sue prosecute testify swear declare announce proclaim
publish broadcast record film capture seize grab grasp clutch release drop
dump discard abandon desert betray deceive lie cheat steal rob murder
slaughter shoot stab wound bleed suffer endure tolerate bear withstand
survive recover heal cure treat diagnose prescribe nurse feed starve drink
swallow chew bite taste smell touch rub scratch burn freeze melt boil cook
bake wash clean scrub wipe sweep organize arrange sort order rank rate grade
score judge evaluate assess review examine inspect investigate research study
analyze test experiment verify validate confirm refute disprove demonstrate
illustrate model simulate replicate reproduce copy imitate echo rehearse
practice train coach teach instruct educate guide direct steer navigate
command demand request beg plead pray worship bless curse condemn denounce
regret mourn grieve weep cry sob laugh smile frown glare stare gaze glance
blink wink nod shake shrug wave gesture signal summon invite welcome greet
expel evict banish exile deport migrate relocate shift transfer transport
ship deliver mail post fetch haul drag tow push crush grind crack snap
shatter smash slam bang knock tap pat stroke hug embrace kiss comfort
console soothe calm relax rest sleep nap wake rise lean kneel bow stumble
trip slip slide glide drift wander roam stroll march stride limp crawl creep
sneak dash sprint race rush hurry delay postpone defer pause halt cease quit
resign retire graduate enroll register apply qualify certify license hire
employ recruit fire promote demote outsource automate program code debug
design engineer construct assemble manufacture fabricate generate invent
innovate improve enhance upgrade update renovate repair fix mend patch
restore preserve conserve sustain fund finance invest donate contribute waste
squander budget afford owe borrow lend loan repay refund reimburse compensate
reward bribe tip audit account balance tally total sum subtract multiply
equal exceed surpass outnumber dominate prevail triumph succeed fail collapse
crumble decay rot spoil expire lapse end finish complete conclude wrap seal
shut lock unlock infringe disallow grant compromise negotiate debunk
disagree claim assert presume allege concur refrain abstain advocate endorse
condone disapprove object protest boycott rally petition lobby
""".split()

IRREGULAR_FORMS = {
    "be": "am is are was were been being",
    "have": "has had having",
    "do": "does did done doing",
    "say": "said", "get": "got gotten", "make": "made", "go": "goes went gone",
    "know": "knew known", "take": "took taken", "see": "saw seen",
    "come": "came", "think": "thought", "tell": "told", "find": "found",
    "give": "gave given", "mean": "meant", "keep": "kept", "let": "lets letting",
    "begin": "began begun beginning", "hear": "heard", "run": "ran running",
    "hold": "held", "bring": "brought", "write": "wrote written",
    "sit": "sat sitting", "stand": "stood", "lose": "lost", "pay": "paid",
    "meet": "met", "set": "sets setting", "learn": "learned learnt",
    "lead": "led", "understand": "understood", "speak": "spoke spoken",
    "read": "reads reading", "grow": "grew grown", "win": "won winning",
    "buy": "bought", "send": "sent", "build": "built", "fall": "fell fallen",
    "cut": "cuts cutting", "sell": "sold", "rise": "rose risen",
    "draw": "drew drawn", "choose": "chose chosen", "eat": "ate eaten",
    "catch": "caught", "hit": "hits hitting", "fly": "flew flown",
    "swear": "swore sworn", "steal": "stole stolen", "shoot": "shot",
    "bleed": "bled", "bear": "bore borne", "leave": "left", "feel": "felt",
    "break": "broke broken", "spend": "spent", "drink": "drank drunk",
    "sleep": "slept", "wake": "woke woken", "fight": "fought",
    "teach": "taught", "wear": "wore worn", "forgive": "forgave forgiven",
    "freeze": "froze frozen", "hide": "hid hidden", "shake": "shook shaken",
    "bend": "bent", "lend": "lent", "quit": "quits quitting", "stick": "stuck",
    "strike": "struck", "tear": "tore torn", "feed": "fed", "flee": "fled",
    "creep": "crept", "deal": "dealt", "dig": "dug digging", "hang": "hung",
    "kneel": "knelt", "lay": "laid", "ride": "rode ridden",
    "ring": "rang rung", "sing": "sang sung", "slide": "slid",
    "weep": "wept", "beat": "beaten", "become": "became", "bite": "bit bitten",
    "blow": "blew blown", "drive": "drove driven", "seek": "sought",
    "throw": "threw thrown", "forbid": "forbade forbidden", "lie": "lay lain lied",
    "swim": "swam swum swimming", "sweep": "swept", "shut": "shuts shutting",
}

# polysyllabic lemmas that double the final consonant
DOUBLED = set("""
admit submit permit commit refer occur prefer regret control ban equip
grab stab rob drop stop snap slam tap pat rub hug nod trip slip skip plan
""".split())

# auxiliaries, modals, and verb-bearing contractions (with bare variants
# for the apostrophe-free spellings common in forum text)
VERB_EXTRAS = """
am is are was were been being can could will would shall should may might
must ought cannot isn't aren't wasn't weren't don't doesn't didn't won't
wouldn't couldn't shouldn't can't hasn't haven't hadn't ain't isnt arent
wasnt werent dont doesnt didnt wont wouldnt couldnt shouldnt cant hasnt
havent hadnt aint it's he's she's that's there's here's what's who's let's
i'm i've i'll i'd you're you've you'll you'd we're we've we'll we'd they're
they've they'll they'd im ive youre theyre lets thats theres whats whos
gonna wanna gotta
""".split()


def _one_vowel_group(word: str) -> bool:
    groups, prev = 0, False
    for c in word:
        isv = c in "aeiouy"
        if isv and not prev:
            groups += 1
        prev = isv
    return groups == 1


def _doubles(lemma: str) -> bool:
    if lemma in DOUBLED:
        return True
    return (len(lemma) >= 3 and _one_vowel_group(lemma)
            and lemma[-1] not in "aeiouwxy" and lemma[-2] in "aeiou"
            and lemma[-3] not in "aeiou")


def verb_forms(lemma: str) -> set[str]:
    forms = {lemma}
    irregular = IRREGULAR_FORMS.get(lemma, "").split()
    forms.update(irregular)
    # third person singular
    if lemma.endswith(("s", "x", "z", "ch", "sh")):
        forms.add(lemma + "es")
    elif lemma.endswith("y") and lemma[-2] not in "aeiou":
        forms.add(lemma[:-1] + "ies")
    elif lemma not in ("be",):
        forms.add(lemma + "s")
    # present participle
    if lemma.endswith("ie"):
        forms.add(lemma[:-2] + "ying")
    elif lemma.endswith("e") and not lemma.endswith(("ee", "oe", "ye")):
        forms.add(lemma[:-1] + "ing")
    elif _doubles(lemma):
        forms.add(lemma + lemma[-1] + "ing")
    else:
        forms.add(lemma + "ing")
    # past / participle for regular verbs
    if not irregular:
        if lemma.endswith("e"):
            forms.add(lemma + "d")
        elif lemma.endswith("y") and lemma[-2] not in "aeiou":
            forms.add(lemma[:-1] + "ied")
        elif _doubles(lemma):
            forms.add(lemma + lemma[-1] + "ed")
        else:
            forms.add(lemma + "ed")
    return forms


# ---------------------------------------------------------------------------
# nouns (pluralized below), adjectives, adverbs, function words, extras

NOUNS = """
time year people way day man woman child world life hand part eye place work
week case point government company number group problem fact money story
month lot right study book job word business issue side kind head house
service friend father mother power hour game line end member law car city
community name president team minute idea body information parent face level
office door health person art war history party result change morning reason
research girl boy guy moment air teacher force education foot policy process
music market sense nation plan college interest death experience effect use
class control care field development role student state country school family
gun weapon firearm rifle pistol bullet ammunition trigger permit license
amendment constitution freedom liberty safety crime criminal violence victim
murder homicide suicide defense protection police officer court judge jury
trial prison jail punishment justice society culture religion church faith
god bible scripture belief believer atheist christian marriage wedding spouse
husband wife partner couple divorce union relationship sex gender sexuality
orientation homosexual heterosexual lesbian equality discrimination prejudice
bias hate hatred tolerance acceptance abortion pregnancy fetus embryo baby
infant birth conception trimester clinic doctor nurse hospital medicine
patient disease illness cancer surgery procedure operation treatment therapy
drug pill vaccine choice decision option argument debate discussion
conversation dialogue dialog statement claim premise conclusion evidence
proof statistic data figure percentage rate ratio average majority minority
opinion view viewpoint perspective position stance value principle standard
rule regulation restriction limit ban prohibition legislation bill act
measure proposal reform vote voter election campaign politician senator
representative congress parliament democracy republic citizen public
population neighborhood street road town village region area zone district
territory border capital economy economist tax taxpayer dollar cent price
cost budget deficit debt loan credit bank account investment investor profit
loss income salary wage earning wealth poverty welfare benefit insurance
pension retirement employment unemployment career profession occupation
worker employee employer boss manager corporation industry factory farm
agriculture product goods trade commerce import export store shop mall
purchase sale discount deal bargain customer consumer buyer seller owner
property home apartment building structure room kitchen bathroom bedroom
garage yard garden lawn fence wall roof floor ceiling window table chair
desk bed couch sofa television computer phone internet website email message
letter mail newspaper magazine article journal report document file record
paper page chapter section paragraph sentence language speech talk lecture
presentation audience listener speaker reader writer author journalist
reporter editor publisher media press news broadcast radio station channel
program show episode movie film video picture photo image camera painting
drawing sculpture museum gallery theater stage concert festival event
celebration holiday vacation trip journey travel tour guide map direction
distance location spot site scene space environment nature forest tree plant
flower grass leaf branch root seed soil dirt ground earth land mountain hill
valley river lake ocean sea beach shore coast island desert climate weather
temperature heat cold rain snow wind storm cloud sky sun moon star planet
universe galaxy science scientist physics chemistry biology mathematics math
engineering technology machine engine device tool instrument equipment
material substance chemical element atom molecule cell organism animal dog
cat bird fish horse cow pig sheep chicken lion tiger bear wolf fox deer
rabbit mouse rat snake insect bug spider bee ant food meal breakfast lunch
dinner supper snack bread meat beef pork vegetable fruit apple orange banana
grape berry potato tomato onion carrot corn rice wheat grain sugar salt
pepper spice sauce soup salad sandwich pizza burger cheese milk butter egg
oil water juice coffee tea beer wine alcohol bottle glass cup plate bowl
spoon fork knife diet nutrition calorie protein vitamin mineral exercise
fitness gym sport match tournament championship league player coach referee
fan spectator stadium track pool score goal victory defeat champion winner
loser competition contest prize award trophy medal honor achievement success
failure mistake error fault flaw defect trouble difficulty challenge obstacle
barrier matter situation condition circumstance context background setting
scenario instance example sample specimen pattern design style fashion trend
mode manner method technique approach strategy tactic scheme project task
assignment duty responsibility obligation commitment promise agreement
contract arrangement negotiation compromise settlement resolution solution
answer response reply reaction feedback comment remark observation note memo
reminder warning alert signal sign symbol mark label tag badge stamp seal
logo brand trademark patent copyright certificate diploma degree
qualification skill ability talent gift capacity capability potential
strength weakness advantage disadvantage drawback merit gain risk danger
hazard threat peril security shelter refuge asylum sanctuary haven harbor
port airport terminal destination origin source beginning start finish
middle center core heart soul spirit mind brain thought memory dream
nightmare imagination fantasy reality truth falsehood myth legend tale fable
fiction novel poem poetry verse rhyme song lyric melody tune rhythm beat
harmony chorus guitar piano drum violin trumpet flute voice vocal singer
musician band orchestra crowd mob gang club organization association
alliance coalition partnership membership leadership authority influence
impact consequence outcome output input resource asset liability reputation
status rank title function purpose objective aim target mission vision
agenda schedule calendar appointment meeting conference summit session
hearing interview survey poll questionnaire census referendum initiative
petition protest demonstration rally strike boycott riot revolution
rebellion uprising battle conflict combat struggle clash confrontation
dispute quarrel disagreement controversy scandal crisis emergency disaster
catastrophe tragedy accident incident occurrence phenomenon miracle wonder
mystery secret puzzle riddle query inquiry investigation probe search hunt
quest pursuit chase marathon sprint expedition adventure exploration
discovery invention innovation creation production construction destruction
demolition damage harm injury wound scar bruise burn fracture pain ache
agony suffering misery distress anguish grief sorrow sadness depression
anxiety stress tension pressure strain burden load weight mass volume size
dimension length width height depth perimeter circumference diameter radius
angle curve shape circle square triangle rectangle oval sphere cube cylinder
cone pyramid citizen statistics consensus rhetoric fallacy hypocrisy
hypocrite ideology agenda militia hunter hunting background check checks
massacre shooting shooter robbery assault batter insult sarcasm irony
analogy metaphor logic reasoning rebuttal refutation counterargument
counterexample objection concession qualifier assumption implication
inference generalization stereotype strawman slur accusation allegation
testimony witness juror verdict statute ordinance clause provision loophole
mandate quota subsidy tariff revenue expenditure outlay surplus inflation
recession depression stake stakeholder lobbyist advocate opponent proponent
supporter critic skeptic cynic moderator forum thread post reply comment
user troll flame rant gripe
""".split()

IRREGULAR_PLURALS = {
    "man": "men", "woman": "women", "child": "children", "person": "people",
    "foot": "feet", "tooth": "teeth", "mouse": "mice", "goose": "geese",
    "life": "lives", "knife": "knives", "wife": "wives", "leaf": "leaves",
    "wolf": "wolves", "shelf": "shelves", "half": "halves", "loaf": "loaves",
    "thief": "thieves", "crisis": "crises", "analysis": "analyses",
    "thesis": "theses", "basis": "bases", "phenomenon": "phenomena",
    "criterion": "criteria", "medium": "media", "datum": "data",
    "sheep": "sheep", "deer": "deer", "fish": "fish", "series": "series",
    "species": "species", "statistics": "statistics",
}

ES_O_NOUNS = {"potato", "tomato", "hero", "echo", "veto"}


def plural(noun: str) -> str:
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    if noun in ES_O_NOUNS:
        return noun + "es"
    return noun + "s"


ADJECTIVES = """
good bad big small large little new old young high low long short great
important public private right wrong true false real fake early late hard
easy strong weak free safe dangerous open closed full empty rich poor happy
sad angry calm quiet loud clear unclear dark light heavy bright dull sharp
blunt smooth rough soft firm hot cold warm cool wet dry clean dirty fresh
stale sweet sour bitter salty healthy sick ill alive dead deadly lethal
fatal mortal legal illegal lawful unlawful moral immoral ethical unethical
fair unfair just unjust equal unequal similar different same other another
such certain uncertain sure unsure possible impossible likely unlikely
probable necessary unnecessary essential optional available unavailable
present absent ready busy idle active passive aggressive defensive violent
peaceful hostile friendly kind cruel gentle harsh mild severe extreme
moderate radical conservative liberal progressive traditional modern ancient
contemporary current former future past recent previous next last first
second third final initial original unique common rare usual unusual normal
abnormal typical strange weird odd regular irregular standard special
general specific particular individual personal social political economic
financial commercial industrial agricultural educational academic scientific
technical medical physical mental emotional psychological spiritual
religious secular sacred holy divine evil wicked sinful innocent guilty
responsible irresponsible reliable unreliable honest dishonest truthful
deceptive loyal faithful unfaithful devoted committed dedicated serious
funny humorous amusing entertaining boring interesting fascinating exciting
thrilling tedious tiresome annoying irritating frustrating disappointing
satisfying pleasing pleasant unpleasant comfortable uncomfortable convenient
inconvenient suitable unsuitable appropriate inappropriate proper improper
correct incorrect accurate inaccurate precise vague ambiguous obvious
evident apparent hidden visible invisible transparent opaque simple complex
complicated sophisticated elaborate plain fancy elegant graceful awkward
clumsy skillful talented gifted capable incapable competent incompetent
efficient inefficient effective ineffective productive unproductive useful
useless valuable worthless precious cheap expensive costly affordable
reasonable unreasonable rational irrational logical illogical sensible
foolish wise unwise smart intelligent clever brilliant stupid dumb ignorant
educated learned knowledgeable aware unaware conscious unconscious awake
asleep tired exhausted energetic lively vigorous dynamic static stable
unstable steady unsteady constant variable consistent inconsistent
persistent stubborn flexible rigid strict lenient tolerant intolerant
patient impatient careful careless cautious reckless brave courageous bold
timid shy fearful afraid scared frightened terrified anxious nervous worried
concerned relaxed grateful thankful ungrateful generous stingy selfish
unselfish greedy humble modest proud arrogant vain confident insecure
optimistic pessimistic hopeful hopeless desperate content satisfied
dissatisfied jealous envious curious indifferent apathetic enthusiastic
eager reluctant willing unwilling deliberate intentional accidental
spontaneous voluntary involuntary mandatory compulsory massive enormous huge
gigantic tiny miniature vast immense broad narrow wide thick thin fat slim
lean muscular fit unfit overweight obese skinny tall deep shallow steep flat
level even uneven straight crooked curved round circular rectangular
triangular pregnant unborn newborn juvenile adolescent teenage adult elderly
senior mature immature male female masculine feminine nuclear biological
chemical electrical mechanical digital electronic virtual actual concrete
abstract theoretical practical realistic idealistic national international
local global regional domestic foreign native alien urban rural suburban
metropolitan continental coastal inland northern southern eastern western
central remote nearby adjacent distant close far deviant perverse absurd
ridiculous pathetic hysterical ludicrous preposterous nonsensical insane
sane rampant blatant flagrant gross sheer utter downright outright empirical
anecdotal statistical factual hypothetical presumptuous condescending
patronizing dismissive derogatory inflammatory libelous slanderous
defamatory spoiled entitled oppressed marginalized disenfranchised armed
unarmed loaded concealed automatic semiautomatic ballistic constitutional
unconstitutional judicial legislative executive federal municipal civic
civil criminal forensic punitive preventive protective restrictive
permissive prohibitive elective selective collective inclusive exclusive
""".split()

ADVERBS = """
very really quite rather too also just only even still yet already almost
nearly about around approximately exactly precisely roughly barely hardly
scarcely merely simply truly actually certainly definitely absolutely
completely totally entirely fully partly partially mostly mainly largely
generally usually normally typically often frequently sometimes occasionally
rarely seldom never always constantly continually repeatedly again once
twice soon later earlier now then today tomorrow yesterday tonight currently
recently previously formerly eventually finally ultimately initially
originally secondly thirdly lastly meanwhile moreover furthermore however
nevertheless nonetheless therefore thus hence consequently accordingly
otherwise instead anyway anyhow besides together apart alone separately
jointly directly indirectly immediately instantly quickly rapidly swiftly
slowly gradually suddenly abruptly carefully carelessly deliberately
intentionally accidentally easily badly well better best worse worst fast
faster slower here there everywhere anywhere somewhere nowhere inside
outside upstairs downstairs forward backward upward downward ahead behind
above below indeed perhaps maybe possibly probably surely obviously clearly
apparently evidently seemingly supposedly allegedly reportedly honestly
frankly seriously literally figuratively basically essentially fundamentally
particularly especially specifically notably remarkably surprisingly
unfortunately fortunately sadly happily luckily hopefully
""".split()

FUNCTION_EXTRAS = """
one two three four five six seven eight nine ten eleven twelve twenty thirty
forty fifty hundred thousand million billion none nothing nobody someone
somebody something anyone anybody anything everyone everybody everything
whoever whatever whichever whenever wherever somehow somewhat anymore ok
okay yes yeah yep nope wow ha hmm huh oh ah hey hello hi goodbye bye please
thanks thank sorry unless although though whether since because while until
despite toward towards upon within without among amongst beside besides
beyond along across behind beneath underneath throughout per via onto
regarding concerning according else either neither nor
""".split()

INFORMAL = """
dont cant wont isnt arent wasnt werent doesnt didnt hasnt havent hadnt aint
youre theyre whos whats thats theres im ive ill id youd youll weve theyve
lets gonna wanna gotta kinda sorta dunno yall lol omg btw imo imho tbh
""".split()

# ---------------------------------------------------------------------------
# category lexicon (open LIWC-compatible equivalent)

CATEGORY_IDS = {
    "total_pronouns": 1, "personal_pronouns": 2, "first_person_singular": 3,
    "first_person_plural": 4, "second_person": 5, "third_person_singular": 6,
    "third_person_plural": 7, "impersonal_pronouns": 8, "family": 10,
    "affiliation": 11, "drives": 12, "biological_processes": 13, "health": 14,
    "sexual": 15, "money": 16, "negations": 17, "certainty": 18, "swear": 19,
    "religion": 20, "death": 21,
}

CATEGORY_WORDS = {
    # pronoun hierarchy: specific -> personal -> total; impersonal -> total
    (1, 2, 3): "i me my mine myself i'm i've i'll i'd im ive",
    (1, 2, 4, 11, 12): "we us our ours ourselves we're we've we'll we'd lets let's weve",
    (1, 2, 5): "you your yours yourself yourselves you're you've you'll you'd ya youre",
    (1, 2, 6): "he she him her his hers himself herself he's she's he'd she'd he'll she'll",
    (1, 2, 7): "they them their theirs themselves they're they've they'll they'd theyre",
    (1, 8): ("it its it's itself this that these those anything everything nothing "
             "something stuff thing things what whatever which whichever that's thats "
             "what's whats"),
    (10, 11, 12): ("family families mom moms mommy mother* dad dads daddy father* "
                   "parent* son sons daughter* brother* sister* wife wives husband* "
                   "spouse* marriage* married marry marries marrying wedding* bride* "
                   "groom* grandm* grandp* grandf* aunt* uncle* cousin* kid kids child "
                   "children childhood baby babies sibling* folks household* nephew* "
                   "niece* stepmother stepfather"),
    (11, 12): ("ally allies alliance* belong* communit* companion* friend* friendship* "
               "social team teams teammate* partner* member* membership group* club* "
               "neighbor* colleague* together union unions unite* united buddy buddies "
               "crew tribe* mate mates fellowship fellow*"),
    (12,): ("power* control* win winner* winning won achieve* achievement* success* "
            "succeed* superior* dominan* dominate* leader* leadership ambition* goal "
            "goals motive* motivat* reward* prize* risk* danger* threat* threaten* "
            "safe safety safer safest secure* security protect* defend* defense* "
            "weak* strong* strength* force* forces"),
    (13,): ("bio* blood* body bodies bodily heart* brain* flesh gene* genetic* dna "
            "pregnan* birth* born conceiv* conception fetus* fetal embryo* womb uterus "
            "cell cells organ organs organism* skin bone* breath* breathe* alive life "
            "lives living hormone* sperm chromosome*"),
    (13, 14): ("health* healthy ill illness* sick* sickness disease* doctor* physician* "
               "hospital* medic* medicine medical clinic* pain* painful injur* wound* "
               "heal* healing cure* cured drug* pill pills vaccine* therapy* therapist* "
               "cancer* infect* infection* surgery surgeries surgical symptom* diagnos* "
               "patient* nurse* ache* fever* virus* epidemic* pandemic* disorder* "
               "trauma* wellness"),
    (13, 15): ("sex sexes sexual* sexuality gay gays lesbian* homosexual* heterosexual* "
               "bisexual* queer* lgbt* transgender* intimacy intimate lust* porn* rape* "
               "rapist* incest* orgasm* virgin* erotic* arous* naked nude* genital*"),
    (16,): ("money* cash dollar* buck bucks price* pricing cost costs costly pay paid "
            "pays paying payment* tax* fund funds funding fee fees budget* econom* "
            "financ* bank banks banking buy buys buying bought sell sells selling sold "
            "sale* spend* spending spent afford* wealth* income* profit* debt* loan* "
            "insurance* invest* market* worth cheap* expensive poverty poor rich richer "
            "richest salary salaries wage wages subsid*"),
    (17,): ("no not never none nobody nothing nowhere neither nor without cannot can't "
            "cant don't dont doesn't doesnt didn't didnt won't wont wouldn't wouldnt "
            "couldn't couldnt shouldn't shouldnt isn't isnt aren't arent wasn't wasnt "
            "weren't werent hasn't hasnt haven't havent hadn't hadnt ain't aint"),
    (18,): ("always absolute* certain* clear clearly definite* undoubtedly undeniab* "
            "obvious* sure surely truly completely totally entirely every everything "
            "must proof prove proves proved proven fact facts factual exact* indeed "
            "inevitab* unquestionab* guarantee* definitiv* irrefutab*"),
    (19,): "damn* hell crap* shit* fuck* bitch* bastard* asshole* piss* screw*",
    (20,): ("god gods god's church* bible* biblical holy sacred faith* pray prayer* "
            "praying prays religio* christian* jesus christ lord sin sins sinner* "
            "sinful soul souls heaven* divine worship* atheis* agnostic* muslim* "
            "islam* jewish jew jews priest* pastor* preacher* temple* mosque* "
            "scripture* theolog* spiritual*"),
    (21,): ("death* dead deadly die died dies dying kill* murder* suicide* fatal* "
            "deceased lethal slain slaughter* massacre* grave* funeral* corpse* "
            "casualt* execute executed execution* perish*"),
}

# ---------------------------------------------------------------------------
# polarity lexicon

POLARITY = {
    0.9: "wonderful excellent superb",
    0.85: "amazing awesome fantastic perfect magnificent",
    0.8: "love loves loved adore brilliant beautiful best outstanding joy joyful "
         "thrilled marvelous terrific",
    0.75: "delightful incredible",
    0.7: "great blessed bless admirable splendid",
    0.55: "happy grateful",
    0.5: "good glad thank thanks appreciate pleasant enjoy enjoyed respectful peace "
         "peaceful successful",
    0.45: "nice helpful friendly kind smart wise respect hopeful succeed success "
          "improve improved",
    0.4: "agree agreed useful positive welcome comfort hope win winner freedom "
          "better honest clever",
    0.35: "fair decent safe safer correct like liked benefit",
    0.3: "right support true strong protect",
    0.1: "okay ok",
    0.05: "moderate",
    0.0: "maybe guess seems average neutral common usual",
    -0.3: "lose lost doubt risk weak",
    -0.35: "problem problems poor dirty sick ugly broken risky",
    -0.4: "wrong worried worry blame damage illegal annoyed guilt guilty",
    -0.45: "bad unfair foolish fool absurd nonsense useless fail failed hurt harm "
           "fear afraid scared crime criminal war threat danger insult offensive "
           "rude pain shame ridiculous",
    -0.5: "sad unhappy angry stupid dumb worthless failure harmful painful suffer "
          "suffering dangerous violent violence lie lies cheat steal shameful loser "
          "annoying",
    -0.55: "liar cruel miserable pathetic worse",
    -0.6: "hell trash garbage deviant",
    -0.65: "damn disgrace",
    -0.7: "kill killing monster nightmare disaster tragedy tragic corrupt idiot "
          "shit fuck worst savage",
    -0.75: "terrible awful disgust wicked moron bitch bastard abuse brutal "
           "devastating catastrophe tyranny tyrant pervert perverted",
    -0.8: "hate hates hated horrible disgusting vile killer scum racist bigot "
          "bigotry abusive asshole oppression slaughter",
    -0.85: "hatred evil despicable atrocious murder heinous horrific abomination",
    -0.9: "murderer torture massacre",
    -0.95: "rape genocide",
}


# ---------------------------------------------------------------------------

def build_verbs() -> set[str]:
    forms: set[str] = set()
    for lemma in set(VERB_LEMMAS):
        forms |= verb_forms(lemma)
    forms.update(VERB_EXTRAS)
    return forms


def build_dictionary(verbs: set[str]) -> set[str]:
    words: set[str] = set()
    words.update(STOPWORDS)
    words.update(verbs)
    for noun in set(NOUNS):
        words.add(noun)
        words.add(plural(noun))
    words.update(ADJECTIVES)
    words.update(ADVERBS)
    words.update(FUNCTION_EXTRAS)
    words.update(INFORMAL)
    for ids, text in CATEGORY_WORDS.items():
        for pattern in text.split():
            if not pattern.endswith("*"):
                words.add(pattern)
    for _, text in POLARITY.items():
        words.update(text.split())
    return words


def write_wordlist(path: Path, words: set[str]) -> None:
    path.write_text("\n".join(sorted(words)) + "\n", encoding="utf-8")


def write_category_lexicon(path: Path) -> None:
    lines = ["%"]
    for name, cid in sorted(CATEGORY_IDS.items(), key=lambda kv: kv[1]):
        lines.append(f"{cid}\t{name}")
    lines.append("%")
    entries: dict[str, set[int]] = {}
    for ids, text in CATEGORY_WORDS.items():
        for pattern in text.split():
            entries.setdefault(pattern, set()).update(ids)
    for pattern in sorted(entries):
        ids = "\t".join(str(i) for i in sorted(entries[pattern]))
        lines.append(f"{pattern}\t{ids}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_polarity(path: Path) -> None:
    scores: dict[str, float] = {}
    for value, text in POLARITY.items():
        for word in text.split():
            scores[word] = value
    lines = [f"{word}\t{scores[word]}" for word in sorted(scores)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    verbs = build_verbs()
    dictionary = build_dictionary(verbs)
    write_wordlist(DATA_DIR / "stopwords.txt", set(STOPWORDS))
    (DATA_DIR / "abbreviations.txt").write_text(
        "\n".join(sorted(set(ABBREVIATIONS))) + "\n", encoding="utf-8")
    write_wordlist(DATA_DIR / "verbs.txt", verbs)
    write_wordlist(DATA_DIR / "dictionary.txt", dictionary)
    write_category_lexicon(DATA_DIR / "categories.dic")
    write_polarity(DATA_DIR / "polarity.txt")
    print(f"stopwords: {len(set(STOPWORDS))}")
    print(f"abbreviations: {len(set(ABBREVIATIONS))}")
    print(f"verb forms: {len(verbs)}")
    print(f"dictionary: {len(dictionary)}")
    print(f"categories: {len(CATEGORY_IDS)}")


if __name__ == "__main__":
    main()
