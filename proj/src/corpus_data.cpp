// Embedded corpus: transcribed squares and tables.
// Each square is an 81-character row-major string of 1-based symbols.
#include "divsudoku/corpus.hpp"

namespace divsudoku::corpus {

const char* const kAppendix[186] = {
    "147258369825936714693471582258169437936724851471583296384617925519842673762395148",  // DS(9,1)
    "147258369825936714693471582258147693936825147471693825369582471714369258582714936",
    "147258369825936714693471582258147693936825147471693825384519276519762438762384951",
    "147258369825936714693471582258149637936725841471683295369517428714862953582394176",
    "147258369825936714693471582258149637936725841471683295384517926519862473762394158",
    "147258369825936714693471582258149637936725841471683295384592176519367428762814953",
    "147258369825936714693471582258149673936725148471683925369814257714592836582367491",
    "147258369825936714693471582258149673936725148471683925384517296519862437762394851",
    "147258369825936714693471582258169437936724851471583296369842175714395628582617943",
    "147258369825936714693471582258169437936724851471583296384692175519347628762815943",
    "147258369825936714693471582258169473936724158471583926384617295519842637762395841",  // DS(9,11)
    "147258369825936714693471582258194637936527841471863295369715428714682953582349176",
    "147258369825936714693471582258194637936527841471863295384715926519682473762349158",
    "147258369825936714693471582258194673936527148471863925369742851714385296582619437",
    "147258369825936714693471582258194673936527148471863925384619257519742836762385491",
    "147258369825936714693471582258194673936527148471863925384715296519682437762349851",
    "147258369825936714693471582258369147936714825471582693369147258714825936582693471",
    "147258369825936714693471582258369147936714825471582693369825471714693258582147936",
    "147258369825936714693471582258369147936714825471582693384195276519627438762843951",
    "147258369825936714693471582258369147936714825471582693384627951519843276762195438",
    "147258369825936714693471582258369471936714258471582936369147825714825693582693147",  // DS(9,21)
    "147258369825936714693471582258369471936714258471582936384195627519627843762843195",
    "147258369825936714693471582258369471936714258471582936384627195519843627762195843",
    "147258369825936714693471582258394176936517428471862953384725691519683247762149835",
    "147258369825936714693471582258394671936517248471862935384629157519743826762185493",
    "147258369825936714693471582258394671936517248471862935384725196519683427762149853",
    "147258369825936714693471582258714693936582147471369825384195276519627438762843951",
    "147258369825936714693471582259167438736824951481593276368742195914385627572619843",
    "147258369825936714693471582259167438736824951481593276374682195518349627962715843",
    "147258369825936714693471582259184637736529841481763295374692158518347926962815473",
    "147258369825936714693471582259184637736529841481763295374815926518692473962347158",  // DS(9,31)
    "147258369825936714693471582259184673736529148481763925374815296518692437962347851",
    "147258369825936714693471582259367148736814925481592673368149257914725836572683491",
    "147258369825936714693471582259367148736814925481592673368725491914683257572149836",
    "147258369825936714693471582259367148736814925481592673374185296518629437962743851",
    "147258369825936714693471582259367148736814925481592673374629851518743296962185437",
    "147258369825936714693471582259367841736814295481592637374185926518629473962743158",
    "147258369825936714693471582259384671736519248481762935368195427914627853572843196",
    "147258369825936714693471582259384671736519248481762935374195826518627493962843157",
    "147258369825936714693471582259814673736592148481367925374185296518629437962743851",
    "147258369825936714693471582274195638538627941961843275386519427419762853752384196",  // DS(9,41)
    "147258396825936417693471852258147639936825741471693285369582174714369528582714963",
    "147258396825936417693471852258149673936725148471683925369517284714862539582394761",
    "147258396825936417693471852258149673936725148471683925384517269519862734762394581",
    "147258396825936417693471852258149673936725148471683925384592761519367284762814539",
    "147258396825936417693471852258149763936725184471683529369517248714862935582394671",
    "147258396825936417693471852258149763936725184471683529369814275714592638582367941",
    "147258396825936417693471852258149763936725184471683529384592671519367248762814935",
    "147258396825936417693471852258169734936724581471583269369842175714395628582617943",
    "147258396825936417693471852258169734936724581471583269384617925519842673762395148",
    "147258396825936417693471852258169734936724581471583269384692175519347628762815943",  // DS(9,51)
    "147258396825936417693471852258169743936724185471583629369815274714692538582347961",
    "147258396825936417693471852258169743936724185471583629369842571714395268582617934",
    "147258396825936417693471852258169743936724185471583629384692571519347268762815934",
    "147258396825936417693471852258194673936527148471863925369715284714682539582349761",
    "147258396825936417693471852258194673936527148471863925369742581714385269582619734",
    "147258396825936417693471852258194673936527148471863925384715269519682734762349581",
    "147258396825936417693471852258194763936527184471863529369715248714682935582349671",
    "147258396825936417693471852258194763936527184471863529384619275519742638762385941",
    "147258396825936417693471852258369174936714528471582963369147285714825639582693741",
    "147258396825936417693471852258369174936714528471582963369825741714693285582147639",  // DS(9,61)
    "147258396825936417693471852258369741936714285471582639369147528714825963582693174",
    "147258396825936417693471852258369741936714285471582639369825174714693528582147963",
    "147258396825936417693471852258394671936517248471862935369185724714629583582743169",
    "147258396825936417693471852258394671936517248471862935369725184714683529582149763",
    "147258396825936417693471852258394671936517248471862935384725169519683724762149583",
    "147258396825936417693471852258394761936517284471862539369725148714683925582149673",
    "147258396825936417693471852258394761936517284471862539384629175519743628762185943",
    "147258396825936417693471852258693174936147528471825963369714285714582639582369741",
    "147258396825936417693471852259184673736529148481763925374692581518347269962815734",
    "147258396825936417693471852259184673736529148481763925374815269518692734962347581",  // DS(9,71)
    "147258396825936417693471852259347168736815924481692573368529741914763285572184639",
    "147258396825936417693471852259347168736815924481692573374169285518724639962583741",
    "147258396825936417693471852259347168736815924481692573374529681518763249962184735",
    "147258396825936417693471852259367184736814529481592763368149275914725638572683941",
    "147258396825936417693471852259367184736814529481592763368725941914683275572149638",
    "147258396825936417693471852259384671736519248481762935368195724914627583572843169",
    "147258396825936417693471852259384761736519284481762539374195628518627943962843175",
    "147258396825936417693471852259683174736149528481725963368517249914862735572394681",
    "147258396825936417693471852259683174736149528481725963368592741914367285572814639",
    "147258396825936417693471852259683174736149528481725963374592681518367249962814735",  // DS(9,81)
    "147258396825936417693471852259714638736582941481369275368195724914627583572843169",
    "147258396825936417693471852259714683736582149481369725368195274914627538572843961",
    "147258396825936417693471852259714683736582149481369725374195268518627934962843571",
    "147258396825936417693471852259743168736185924481629573368517249914862735572394681",
    "147258396825936417693471852259743168736185924481629573368592741914367285572814639",
    "147258396825936417693471852259743168736185924481629573374592681518367249962814735",
    "147258396825936417693471852259743681736185249481629735368517924914862573572394168",
    "147258396825936417693471852259743681736185249481629735368592174914367528572814963",
    "147258396825936417693471852259743681736185249481629735374592168518367924962814573",
    "147258396825936417693471852259763148736184925481529673374815269518692734962347581",  // DS(9,91)
    "147258396825936417693471852259843671736195248481627935368519724914762583572384169",
    "147258396825936417693471852259843671736195248481627935368714529914582763572369184",
    "147258396825936417693471852259843671736195248481627935374582169518369724962714583",
    "147258396825936417693471852259843761736195284481627539368714925914582673572369148",
    "147258396825936417693471852259843761736195284481627539374519628518762943962384175",
    "147258396825936417693471852259863174736194528481527963368715249914682735572349681",
    "147258396825936417693471852259863174736194528481527963374619285518742639962385741",
    "147258396825936417693471852259863741736194285481527639368715924914682573572349168",
    "147258396825936417693471852259863741736194285481527639374619528518742963962385174",
    "147258396825936417693471852269384175734519628581762943376195284418627539952843761",  // DS(9,101)
    "147258396825936417693471852269385174734619528581742963376194285418527639952863741",
    "147258396825936417693471852269385741734619285581742639376194528418527963952863174",
    "147258396825936417693471852269714583734582169581369724376195248418627935952843671",
    "147258396825936417693471852269743581734185269581629734376814925418592673952367148",
    "147258396825936417693471852269814573734592168581367924376185249418629735952743681",
    "147258396825936417693471852269843175734195628581627943376519284418762539952384761",
    "147258396825936417693471852269843571734195268581627934376582149418369725952714683",
    "147258396825936417693471852274185639538629741961743285386517924419862573752394168",
    "147258396825936417693471852274195638538627941961843275386519724419762583752384169",
    "147258396825936417693471852274195638538627941961843275386714529419582763752369184",  // DS(9,111)
    "147258396825936417693471852274195683538627149961843725386519274419762538752384961",
    "147258396825936417693471852274369185538714629961582743386195274419627538752843961",
    "147258396825936417693471852274395168538617924961842573386529741419763285752184639",
    "147258396825936417693471852274519638538762941961384275386195724419627583752843169",
    "147258396825936417693471852274519683538762149961384725386195274419627538752843961",
    "147259368825736914693481572258367149936814725471592683369148257714925836582673491",
    "147259368825736914693481572258367149936814725471592683384175296519628437762943851",
    "147259368825736914693481572258367491936814257471592836369148725714925683582673149",
    "147259368825736914693481572258367491936814257471592836384175629519628743762943185",
    "147259368825736914693481572259167483736824159481593726368915247914672835572348691",  // DS(9,121)
    "147259368825736914693481572259167483736824159481593726374618295518942637962375841",
    "147259368825736914693481572259167843736824195481593627368942751914375286572618439",
    "147259368825736914693481572259167843736824195481593627374618259518942736962375481",
    "147259368825736914693481572259167843736824195481593627374915286518672439962348751",
    "147259368825736914693481572259347186736815429481692753368174295914528637572963841",
    "147259368825736914693481572259347186736815429481692753374168295518924637962573841",
    "147259368825736914693481572259347186736815429481692753374528691518963247962174835",
    "147259368825736914693481572259347681736815249481692735368924157914573826572168493",
    "147259368825736914693481572259347681736815249481692735374528196518963427962174853",
    "147259368825736914693481572259368147736914825481572693368147259914825736572693481",  // DS(9,131)
    "147259368825736914693481572259368147736914825481572693374195286518627439962843751",
    "147259368825736914693481572259368741736914285481572639368195427914627853572843196",
    "147259368825736914693481572259368741736914285481572639374195826518627493962843157",
    "147259368825736914693481572259368741736914285481572639374825196518693427962147853",
    "147259368825736914693481572259374186736518429481962753374825691518693247962147835",
    "147259368825736914693481572259374681736518249481962735368195427914627853572843196",
    "147259368825736914693481572259374681736518249481962735374195826518627493962843157",
    "147259368825736914693481572259617483736842159481395726368174295914528637572963841",
    "147259368825736914693481572259617483736842159481395726374168295518924637962573841",
    "147259368825736914693481572259617483736842159481395726374528691518963247962174835",  // DS(9,141)
    "147259368825736914693481572259863741736194285481527639374915826518672493962348157",
    "147259368825736914693481572268194735934527681571863249359618427716942853482375196",
    "147259368825736914693481572268194735934527681571863249386915427419672853752348196",
    "147259368825736914693481572268194735934527681571863249386942157419375826752618493",
    "147259368825736914693481572268194753934527186571863429359618247716942835482375691",
    "147259368825736914693481572268194753934527186571863429359672841716348295482915637",
    "147259368825736914693481572268347159934815726571692483359168247716924835482573691",
    "147259368825736914693481572268347159934815726571692483386174295419528637752963841",
    "147259368825736914693481572268347195934815627571692843359174286716528439482963751",
    "147259368825736914693481572268347195934815627571692843386924751419573286752168439",  // DS(9,151)
    "147259368825736914693481572268395741934617285571842639359168427716924853482573196",
    "147259368825736914693481572268395741934617285571842639386924157419573826752168493",
    "147259368825736914693481572268593741934167285571824639359618427716942853482375196",
    "147259368825736914693481572274395681538617249961842735359168427716924853482573196",
    "147259386825736419693481752258367194936814527471592863369148275714925638582673941",
    "147259386825736419693481752258367194936814527471592863369175248714628935582943671",
    "147259386825736419693481752258367941936814275471592638369148527714925863582673194",
    "147259386825736419693481752258367941936814275471592638369175824714628593582943167",
    "147259386825736419693481752258394167936517824471862593384925671519673248762148935",
    "147259386825736419693481752258394671936517248471862935369175824714628593582943167",  // DS(9,161)
    "147259386825736419693481752258394671936517248471862935384925167519673824762148593",
    "147259386825736419693481752258673194936148527471925863369814275714592638582367941",
    "147259386825736419693481752258673194936148527471925863384592671519367248762814935",
    "147259386825736419693481752258943671936175248471628935384592167519367824762814593",
    "147259386825736419693481752259167843736824195481593627368915274914672538572348961",
    "147259386825736419693481752259167843736824195481593627368942571914375268572618934",
    "147259386825736419693481752259347861736815294481692537368174925914528673572963148",
    "147259386825736419693481752259347861736815294481692537368924175914573628572168943",
    "147259386825736419693481752259368174736914528481572963368147295914825637572693841",
    "147259386825736419693481752259368174736914528481572963368195247914627835572843691",  // DS(9,171)
    "147259386825736419693481752259374168736518924481962573368195247914627835572843691",
    "147259386825736419693481752259374168736518924481962573374825691518693247962147835",
    "147259386825736419693481752259617834736842591481395267368924175914573628572168943",
    "147259386825736419693481752259617834736842591481395267374168925518924673962573148",
    "147259386825736419693481752259863147736194825481527693368915274914672538572348961",
    "147259386825736419693481752259863147736194825481527693374915268518672934962348571",
    "147259386825736419693481752268194573934527168571863924359618247716942835482375691",
    "147259386825736419693481752268194573934527168571863924386915247419672835752348691",
    "147259386825736419693481752268347195934815627571692843359168274716924538482573961",
    "147259386825736419693481752268347195934815627571692843386924571419573268752168934",  // DS(9,181)
    "147259386825736419693481752268374591934518267571962834359627148716843925482195673",
    "147259386825736419693481752269174835734528691581963247376815924418692573952347168",
    "147259386825736419693481752269375148734618925581942673376824591418593267952167834",
    "147259386825736419693481752269843571734195268581627934376914825418572693952368147",
    "147259386825736419693481752276814593438592167951367824369175248714628935582943671",
};

const char* const kL0 = "147385296825619437693742851539471628761258943284936175952863714376194582418527369";
const char* const kExampleIota = "147258396825936417693471852258169734936724581471583269384692175519347628762815943";
const char* const kExampleMu = "147285396825639417693741852274853169538196724961427583386914275419572638752368941";
const char* const kL17 = "528741396963285417174639852639852174741396528285417963417963285852174639396528741";
const char* const kL175 = "258491376936257418471836952619582734742369581385714269167943825824175693593628147";
const char* const kL179 = "714953826582176493369428157835249761691735284247681539953814672176592348428367915";
const char* const kQMul = "167834925824591673593267148915472836672358491348916257259683714736149582481725369";
const char* const kQRdiv = "149862375725394618683517942962481537374259861518736294851943726296175483437628159";
const char* const kQLdiv = "185692347629347815743815692268439571934751268571286934816924753492573186357168429";

const char* const kTemplate = "1472..3..825.3..1.693..1..22.........3.........1......3.........1.........2......";

const char* const kDs18Displays[3] = {
    "147258369825936714693471582258369147936714825471582693369825471714693258582147936",
    "123456789897231564645978312231564897978312645456789123384627951762195438519843276",
    "159483726834267591672915348267591834915348672483726159321654987798132465546879213",
};

const int kDs18ColumnLabels[3][9] = {
    {1,2,3,4,5,6,7,8,9},
    {1,4,7,2,5,8,3,6,9},
    {1,5,9,2,6,7,3,4,8},
};

const std::vector<std::vector<int>> kTable1 = {
    {1,53,135},
    {2,35,156},
    {3,40,42,149,163,180},
    {4},
    {5,24,46,64,123,126},
    {6,12,14,29,43,102},
    {7,37,157},
    {8,32,47,142,161,172},
    {9,10,49},
    {11,31,52,134,159,171},
    {13,26,56,65,125,127},
    {15,39,58,73,98,101},
    {16,55,150},
    {17},
    {18,19,21,33,60,117},
    {20,62,131},
    {22,34,61,75,118,119},
    {23,36,63,132,158,170},
    {25,28,67,100,111,113},
    {27,69,148},
    {30,41,80,155,164,181},
    {38,45,103},
    {44,48,77,109,137,139},
    {50,54,133},
    {51},
    {57,140,174},
    {59,99,107},
    {66,124,168},
    {68},
    {70,130,165,166,173,177},
    {71,122,162,169,184,185},
    {72,78,83,95,96,97},
    {74,82,85,104,138,145},
    {76,120},
    {79,84,93,116,151,152},
    {81,115,146},
    {86,88,106,112,143,147},
    {87,144,178},
    {89,92,110,114,141,154},
    {90,153,182},
    {91,105,121,129,160,186},
    {94,108,128,136,167,176},
    {175},
    {179},
    {183},
};

const std::map<int, std::vector<std::array<std::string, 3>>> kTable2 = {
    {2, {
        {std::string("{123 456 789}"), std::string("{123 456 789}"), std::string("{123 456 789}")},
        {std::string("{123 456 789}"), std::string("{123 456 789}"), std::string("{159 267 348}")},
    }},
    {17, {
        {std::string("{123 456 789}"), std::string("{123 456 789}"), std::string("{123 456 789}")},
        {std::string("{123 456 789}"), std::string("{123 456 789}"), std::string("{159 267 348}")},
        {std::string("{123 456 789}"), std::string("{147 258 369}"), std::string("{159 267 348}")},
        {std::string("{123 456 789}"), std::string("{147 258 369}"), std::string("{147 258 369}")},
        {std::string("{123 456 789}"), std::string("{159 267 348}"), std::string("{123 456 789}")},
        {std::string("{123 456 789}"), std::string("{159 267 348}"), std::string("{147 258 369}")},
        {std::string("{147 258 369}"), std::string("{123 456 789}"), std::string("{159 267 348}")},
        {std::string("{147 258 369}"), std::string("{123 456 789}"), std::string("{168 249 357}")},
        {std::string("{147 258 369}"), std::string("{159 267 348}"), std::string("{168 249 357}")},
        {std::string("{147 258 369}"), std::string("{159 267 348}"), std::string("{147 258 369}")},
        {std::string("{147 258 369}"), std::string("{168 249 357}"), std::string("{159 267 348}")},
        {std::string("{147 258 369}"), std::string("{168 249 357}"), std::string("{147 258 369}")},
        {std::string("{159 267 348}"), std::string("{123 456 789}"), std::string("{123 456 789}")},
        {std::string("{159 267 348}"), std::string("{123 456 789}"), std::string("{168 249 357}")},
        {std::string("{159 267 348}"), std::string("{147 258 369}"), std::string("{147 258 369}")},
        {std::string("{159 267 348}"), std::string("{147 258 369}"), std::string("{168 249 357}")},
        {std::string("{159 267 348}"), std::string("{168 249 357}"), std::string("{147 258 369}")},
        {std::string("{159 267 348}"), std::string("{168 249 357}"), std::string("{123 456 789}")},
        {std::string("{168 249 357}"), std::string("{147 258 369}"), std::string("{159 267 348}")},
        {std::string("{168 249 357}"), std::string("{147 258 369}"), std::string("{168 249 357}")},
        {std::string("{168 249 357}"), std::string("{159 267 348}"), std::string("{168 249 357}")},
        {std::string("{168 249 357}"), std::string("{159 267 348}"), std::string("{123 456 789}")},
        {std::string("{168 249 357}"), std::string("{168 249 357}"), std::string("{123 456 789}")},
        {std::string("{168 249 357}"), std::string("{168 249 357}"), std::string("{159 267 348}")},
    }},
    {18, {
        {std::string("{123 456 789}"), std::string("{123 456 789}"), std::string("{123 456 789}")},
        {std::string("{123 456 789}"), std::string("{123 456 789}"), std::string("{159 267 348}")},
        {std::string("{123 456 789}"), std::string("{147 258 369}"), std::string("{147 258 369}")},
        {std::string("{123 456 789}"), std::string("{159 267 348}"), std::string("{147 258 369}")},
    }},
    {20, {
        {std::string("{123 456 789}"), std::string("{123 456 789}"), std::string("{123 456 789}")},
        {std::string("{123 456 789}"), std::string("{125 389 467}"), std::string("{127 346 589}")},
        {std::string("{123 456 789}"), std::string("{127 346 589}"), std::string("{179 236 458}")},
        {std::string("{123 456 789}"), std::string("{134 278 569}"), std::string("{139 256 478}")},
        {std::string("{123 456 789}"), std::string("{139 256 478}"), std::string("{125 389 467}")},
        {std::string("{123 456 789}"), std::string("{145 238 679}"), std::string("{134 278 569}")},
        {std::string("{123 456 789}"), std::string("{147 258 369}"), std::string("{159 267 348}")},
        {std::string("{123 456 789}"), std::string("{159 267 348}"), std::string("{147 258 369}")},
        {std::string("{123 456 789}"), std::string("{179 236 458}"), std::string("{145 238 679}")},
    }},
    {27, {
        {std::string("{123 456 789}"), std::string("{123 456 789}"), std::string("{123 456 789}")},
        {std::string("{123 456 789}"), std::string("{147 258 369}"), std::string("{147 258 369}")},
    }},
    {175, {
        {std::string("{123 456 789}"), std::string("{123 456 789}"), std::string("{123 456 789}")},
        {std::string("{147 258 369}"), std::string("{169 247 358}"), std::string("{148 259 367}")},
        {std::string("{168 249 357}"), std::string("{148 259 367}"), std::string("{169 247 358}")},
    }},
    {179, {
        {std::string("{123 456 789}"), std::string("{123 456 789}"), std::string("{123 456 789}")},
        {std::string("{149 257 368}"), std::string("{167 248 359}"), std::string("{158 269 347}")},
        {std::string("{158 269 347}"), std::string("{158 269 347}"), std::string("{167 248 359}")},
        {std::string("{167 248 359}"), std::string("{149 257 368}"), std::string("{149 257 368}")},
    }},
};

}  // namespace divsudoku::corpus
