/* total score of all students */
struct item {
    char name[20];
    int score;
};

int main()
{
    struct item list[50];
    int cnt, total = 0;
    int idx;
    scanf("%d", &cnt);
    idx = 0;
    while (idx < cnt) {
        scanf("%s %d", list[idx].name, &list[idx].score);
        total += list[idx].score;
        idx++;
    }
    printf("%d %.2f\n", total, (double)total / cnt);
    return 0;
}
