struct rec {
    char name[20];
    int score;
};

int main()
{
    struct rec list[50];
    int len, total = 0;
    int p;
    scanf("%d", &len);
    for (p = 0; p < len; p++) {
        scanf("%s %d", list[p].name, &list[p].score);
        total += list[p].score;
    }
    printf("%d %.2f\n", total, (double)total / len);
    return 0;
}
